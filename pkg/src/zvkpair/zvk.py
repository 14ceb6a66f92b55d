"""Zariski-van Kampen presentations and Tietze simplification."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .braids import artin_images
from .errors import IndexRangeError, SchemaError, ZvkError
from .monodromy import MonodromyPresentation, dumps
from .words import Letters, Word, cyclic_reduce, free_reduce, invert_letters, substitute_letters

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class GroupPresentation:
    rank: int
    relators: tuple[Word, ...] = ()
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        rels = []
        for j, r in enumerate(self.relators):
            w = r if isinstance(r, Word) else Word(tuple(r))
            if w.max_index > self.rank:
                raise IndexRangeError(f"relator {j} uses generator {w.max_index} > rank {self.rank}")
            c = cyclic_reduce(w.letters)
            if c:
                rels.append(Word._trusted(c))
        object.__setattr__(self, "relators", tuple(rels))
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(1, self.rank + 1)))
        else:
            names = tuple(self.names)
            if len(names) != self.rank:
                raise SchemaError(f"names: {len(names)} labels for rank {self.rank}")
            object.__setattr__(self, "names", names)

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def exponent_matrix(self) -> list[list[int]]:
        """Relators x generators matrix of total exponents."""
        return [[r.exponent_sum(g) for g in range(1, self.rank + 1)] for r in self.relators]

    def to_json(self) -> dict:
        return {"rank": self.rank, "names": list(self.names),
                "relators": [r.to_json() for r in self.relators]}

    @classmethod
    def from_json(cls, data) -> "GroupPresentation":
        if not isinstance(data, dict) or "rank" not in data or "relators" not in data:
            raise SchemaError("presentation must be an object with 'rank' and 'relators'")
        rank = data["rank"]
        if not isinstance(rank, int) or rank < 0:
            raise SchemaError(f"rank: expected a non-negative integer, got {rank!r}")
        if not isinstance(data["relators"], list):
            raise SchemaError("relators: expected an array")
        rels = []
        for j, r in enumerate(data["relators"]):
            try:
                rels.append(Word.from_json(r))
            except ZvkError as exc:
                raise SchemaError(f"relators[{j}]: {exc}") from exc
        try:
            return cls(rank, tuple(rels), data.get("names"))
        except IndexRangeError as exc:
            raise SchemaError(str(exc)) from exc

    def __str__(self) -> str:
        def fmt(r: Word) -> str:
            return "".join(self.names[abs(x) - 1] + ("^-1" if x < 0 else "") for x in r)
        return "< " + ", ".join(self.names) + " | " + ", ".join(fmt(r) for r in self.relators) + " >"


def load_presentation(path) -> GroupPresentation:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return GroupPresentation.from_json(data)


def store_presentation(p: GroupPresentation, path) -> None:
    Path(path).write_text(dumps(p.to_json()))


def zvk_presentation(mp: MonodromyPresentation, names: Sequence[str] | None = None) -> GroupPresentation:
    """Relators mu_i^-1 mu_i^Phi(gamma_j) for every meridian i and braid j."""
    d = mp.strands
    rels = []
    for b in mp.braids:
        images = artin_images(b)
        for i in range(1, d + 1):
            r = free_reduce((-i,) + images[i - 1])
            if r:
                rels.append(Word._trusted(r))
    if names is None:
        names = tuple(f"a{i}" for i in range(1, d + 1))
    return GroupPresentation(d, tuple(rels), tuple(names))


def projectivize(p: GroupPresentation, infinity_word: Word) -> GroupPresentation:
    """Kill the meridian of the line at infinity."""
    if infinity_word.max_index > p.rank:
        raise IndexRangeError(
            f"infinity word uses generator {infinity_word.max_index} but the rank is {p.rank}")
    if not infinity_word.letters:
        return p
    return GroupPresentation(p.rank, p.relators + (infinity_word,), p.names)


def two_generator_presentation(which: int) -> GroupPresentation:
    """The two-generator presentations of G_1 and G_2 (a quartic, b conic meridian)."""
    if which == 1:
        # a^2 (ab)^2 and [a, b^2]
        rels = (Word((1, 1, 1, 2, 1, 2)), Word((1, 2, 2, -1, -2, -2)))
    elif which == 2:
        # b^2 (ab)^-4
        rels = (Word((2, 2) + (-2, -1) * 4),)
    else:
        raise ValueError("which must be 1 or 2")
    return GroupPresentation(2, rels, ("a", "b"))


# -- Tietze simplification ---------------------------------------------------

def _canonical(r: Letters) -> Letters:
    """Least rotation of r or r^-1; identifies cyclic conjugates and inverses."""
    best = None
    for w in (r, invert_letters(r)):
        for k in range(len(w)):
            rot = w[k:] + w[:k]
            if best is None or rot < best:
                best = rot
    return best


def _sort_key(r: Letters):
    return (len(r), r)


def _normalise(rels: list[Letters]) -> list[Letters]:
    seen = set()
    out = []
    for r in rels:
        c = cyclic_reduce(r)
        if not c:
            continue
        key = _canonical(c)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    out.sort(key=_sort_key)
    return out


def _occurrences(r: Letters, g: int) -> int:
    return sum(1 for x in r if abs(x) == g)


def _eliminate(rank: int, rels: list[Letters]):
    """Find and apply the cheapest single-occurrence generator elimination.

    Returns ``(new_rels, removed_generator)`` or ``None``.
    """
    total = sum(len(r) for r in rels)
    best = None
    for idx, r in enumerate(rels):
        counts: dict[int, int] = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for g in sorted(counts):
            if counts[g] != 1:
                continue
            growth = sum(_occurrences(s, g) for j, s in enumerate(rels) if j != idx) * (len(r) - 2)
            key = (total + growth - len(r), len(r), r, g)
            if best is None or key < best[0]:
                best = (key, idx, g)
    if best is None:
        return None
    _, idx, g = best
    r = rels[idx]
    pos = next(k for k, x in enumerate(r) if abs(x) == g)
    rot = r[pos:] + r[:pos]
    rest = rot[1:]
    # x w = 1 gives x = w^-1 ; x^-1 w = 1 gives x = w
    value = invert_letters(rest) if rot[0] > 0 else rest
    images: list[Letters] = []
    for j in range(1, rank + 1):
        if j == g:
            images.append(tuple(y - 1 if y > g else (y + 1 if y < -g else y) for y in value))
        else:
            images.append((j - 1,) if j > g else (j,))
    out = [substitute_letters(s, images) for j, s in enumerate(rels) if j != idx]
    return out, g


def _best_replacement(s: Letters, r: Letters):
    """Largest shortening of r obtained by rewriting a long piece of s^(+-1).

    If a cyclic rotation of s (or s^-1) reads ``u v`` with |u| > |v|, then
    ``u = v^-1`` and any occurrence of u inside the cyclic word r can be
    replaced by ``v^-1``.
    """
    L = len(s)
    n = len(r)
    if L == 0 or n == 0:
        return None
    doubled = r + r
    best = None
    for w in (s, invert_letters(s)):
        for k in range(L):
            rot = w[k:] + w[:k]
            for m in range(min(L, n), L // 2, -1):
                if best is not None and 2 * m - L <= best[0]:
                    break
                u = rot[:m]
                hit = _find(doubled, u, n)
                if hit is not None:
                    best = (2 * m - L, hit, m, invert_letters(rot[m:]))
                    break
    if best is None:
        return None
    _, start, m, repl = best
    rotated = r[start:] + r[:start]
    return cyclic_reduce(repl + rotated[m:])


def _find(doubled: Letters, u: Letters, n: int) -> int | None:
    m = len(u)
    first = u[0]
    for i in range(n):
        if doubled[i] == first and doubled[i:i + m] == u:
            return i
    return None


def _shorten(rels: list[Letters]):
    for si, s in enumerate(rels):
        for ri, r in enumerate(rels):
            if ri == si or len(r) < len(s):
                continue
            new = _best_replacement(s, r)
            if new is not None and len(new) < len(r):
                out = list(rels)
                out[ri] = new
                return out
    return None


def tietze_simplify(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> GroupPresentation:
    """Shrink a presentation by Tietze moves; deterministic for a fixed budget.

    Each round first tries to delete a generator that occurs exactly once
    in some relator, choosing the elimination with the smallest resulting
    total relator length.  When none exists, relators are shortened by
    substring replacement against shorter relators.  Relators are cyclically
    reduced and deduplicated up to rotation and inversion between moves.
    """
    if budget <= 0:
        raise ZvkError("budget must be positive")
    rank = p.rank
    names = list(p.names)
    rels = _normalise([r.letters for r in p.relators])
    moves = 0
    while moves < budget:
        step = _eliminate(rank, rels)
        if step is not None:
            rels, g = step
            del names[g - 1]
            rank -= 1
        else:
            shorter = _shorten(rels)
            if shorter is None:
                break
            rels = shorter
        rels = _normalise(rels)
        moves += 1
    return GroupPresentation(rank, tuple(Word._trusted(r) for r in rels), tuple(names))
