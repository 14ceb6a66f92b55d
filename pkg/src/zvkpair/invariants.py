"""Isomorphism invariants of finitely presented groups.

Two cheap, exactly computable invariants:

* the abelianization, read off the Smith normal form of the relator
  exponent matrix;
* homomorphism counts ``|Hom(G, Q)|`` into a catalog of small finite groups,
  enumerated by brute force over generator images.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import ZvkError
from .zvk import GroupPresentation


# -- Smith normal form ---------------------------------------------------------

def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Plain row/column elimination over Python integers.  The pivot is always
    the entry of least absolute value in the remaining block (first in
    row-major order on ties).
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                # a smaller remainder now sits in row t or column t
                best = (t, t)
                for i in range(t, m):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t, n):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                i, j = best
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"{d} does not divide {e}")

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    diag = smith_diagonal(p.exponent_matrix()) if p.relators else []
    return AbelianInvariants(p.rank - len(diag), tuple(d for d in diag if d > 1))


# -- finite groups ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group given by its Cayley table: ``table[a, b]`` is the index of a*b."""

    table: np.ndarray
    identity: int = 0
    label: str = ""
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise ZvkError(f"{self.label}: Cayley table must be square and nonempty")
        if t.min() < 0 or t.max() >= n:
            raise ZvkError(f"{self.label}: table entries out of range")
        e = self.identity
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise ZvkError(f"{self.label}: {e} is not an identity")
        # every row and column a permutation <=> Latin square; with associativity => group
        if not all(len(set(row)) == n for row in t) or not all(len(set(col)) == n for col in t.T):
            raise ZvkError(f"{self.label}: table is not a Latin square")
        lhs = t[t[:, :, None], np.arange(n)[None, None, :]]   # (ab)c
        rhs = t[np.arange(n)[:, None, None], t[None, :, :]]   # a(bc)
        if not np.array_equal(lhs, rhs):
            raise ZvkError(f"{self.label}: multiplication is not associative")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        inv = np.argmax(t == e, axis=1)
        inv.setflags(write=False)
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], mul: Callable, identity, label: str) -> "FiniteGroup":
        index = {x: i for i, x in enumerate(elements)}
        table = [[index[mul(x, y)] for y in elements] for x in elements]
        return cls(np.array(table), index[identity], label)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"


def cyclic(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, 0, f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (labelled ``D{2n}``)."""
    elements = [(i, s) for s in (0, 1) for i in range(n)]

    def mul(x, y):
        (i, a), (k, b) = x, y
        return ((i + (k if a == 0 else -k)) % n, (a + b) % 2)

    return FiniteGroup.from_elements(elements, mul, (0, 0), f"D{2 * n}")


def symmetric(n: int) -> FiniteGroup:
    elements = list(itertools.permutations(range(n)))
    return FiniteGroup.from_elements(
        elements, lambda p, q: tuple(q[p[i]] for i in range(n)), tuple(range(n)), f"S{n}")


def quaternion() -> FiniteGroup:
    units = []
    for k in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = sign
            units.append(tuple(v))

    def mul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    return FiniteGroup.from_elements(units, mul, (1, 0, 0, 0), "Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup, label: str | None = None) -> FiniteGroup:
    n, m = g.order, h.order
    a = np.arange(n * m)
    gi, hi = a // m, a % m
    table = g.table[gi[:, None], gi[None, :]] * m + h.table[hi[:, None], hi[None, :]]
    return FiniteGroup(table, g.identity * m + h.identity, label or f"{g.label}x{h.label}")


def catalog(max_order: int) -> list[FiniteGroup]:
    """Small finite groups of order <= max_order, sorted by (order, label).

    Cyclic, dihedral, S_3, S_4, Q_8 and all direct products of nontrivial
    members that fit.  Isomorphic duplicates (C6 and C2xC3, S3 and D6) are
    kept on purpose.
    """
    if not 1 <= max_order <= 64:
        raise ZvkError("max_order must lie in 1..64")
    atoms: list[FiniteGroup] = [cyclic(n) for n in range(1, max_order + 1)]
    atoms += [dihedral(n) for n in range(2, max_order // 2 + 1)]
    if max_order >= 6:
        atoms.append(symmetric(3))
    if max_order >= 24:
        atoms.append(symmetric(4))
    if max_order >= 8:
        atoms.append(quaternion())
    by_factors: dict[tuple[str, ...], FiniteGroup] = {(g.label,): g for g in atoms}
    nontrivial = [g for g in atoms if g.order > 1]
    frontier = [((g.label,), g) for g in nontrivial]
    while frontier:
        nxt = []
        for factors, g in frontier:
            for h in nontrivial:
                if g.order * h.order > max_order:
                    continue
                key = tuple(sorted(factors + (h.label,), key=_label_key))
                if key in by_factors:
                    continue
                prod = direct_product(g, h, "x".join(key))
                by_factors[key] = prod
                nxt.append((key, prod))
        frontier = nxt
    return sorted(by_factors.values(), key=lambda g: (g.order, _label_key(g.label)))


def _label_key(label: str):
    return tuple((part[0], int(part[1:])) for part in label.split("x"))


# -- homomorphism counting ---------------------------------------------------------

def _eval_relator(rel: Sequence[int], assign: np.ndarray, q: FiniteGroup) -> np.ndarray:
    cur = np.full(assign.shape[0], q.identity, dtype=np.int64)
    for x in rel:
        col = assign[:, abs(x) - 1]
        cur = q.table[cur, col if x > 0 else q.inverse[col]]
    return cur


def _count_from(p: GroupPresentation, q: FiniteGroup, first: Sequence[int]) -> int:
    if p.rank == 0:
        return 1
    rels = [r.letters for r in p.relators]
    ready: dict[int, list] = {}
    for r in rels:
        ready.setdefault(max(abs(x) for x in r), []).append(r)
    assign = np.asarray(first, dtype=np.int64)[:, None]
    for k in range(1, p.rank + 1):
        if k > 1:
            n = assign.shape[0]
            assign = np.concatenate([np.repeat(assign, q.order, axis=0),
                                     np.tile(np.arange(q.order), n)[:, None]], axis=1)
        for r in ready.get(k, ()):
            assign = assign[_eval_relator(r, assign, q) == q.identity]
            if not assign.shape[0]:
                return 0
    return int(assign.shape[0])


def hom_count(p: GroupPresentation, q: FiniteGroup, jobs: int = 1) -> int:
    """Number of homomorphisms G -> Q, i.e. generator tuples killing every relator.

    Generators are assigned in order and a relator is checked as soon as all
    its generators have images.  With ``jobs > 1`` the image of the first
    generator is split across worker processes.
    """
    if p.rank == 0:
        return 1
    firsts = list(range(q.order))
    if jobs <= 1:
        return _count_from(p, q, firsts)
    chunks = [firsts[i::jobs] for i in range(jobs) if firsts[i::jobs]]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_from, [p] * len(chunks), [q] * len(chunks), chunks))


def fingerprint(p: GroupPresentation, max_order: int = 16, groups: Sequence[FiniteGroup] | None = None,
                jobs: int = 1) -> dict[str, int]:
    if groups is None:
        groups = catalog(max_order)
    return {g.label: hom_count(p, g, jobs) for g in sorted(groups, key=lambda g: g.label)}
