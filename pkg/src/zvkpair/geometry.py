"""Small exact calculators around the two sextics.

* orbits of 12-torsion exponents under t -> t * zeta_3 and t -> t^-1;
* singular-point sanity checks on the explicit equations;
* Gram lattices of (-2)-curve configurations, discriminants, and the
  torsion obstruction for dihedral covers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import SchemaError, ZvkError

COMPATIBLE = "COMPATIBLE"
OBSTRUCTED = "OBSTRUCTED"


# -- torsion orbits ------------------------------------------------------------

@dataclass(frozen=True)
class ExponentOrbit:
    modulus: int
    classes: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "classes": [list(c) for c in self.classes]}


def orbit_partition(n: int, generators: Iterable) -> ExponentOrbit:
    """Partition Z/n into orbits of the given maps (callables e -> e')."""
    gens = list(generators)
    seen: set[int] = set()
    classes = []
    for start in range(n):
        if start in seen:
            continue
        orbit, todo = {start}, [start]
        while todo:
            e = todo.pop()
            for g in gens:
                f = g(e) % n
                if f not in orbit:
                    orbit.add(f)
                    todo.append(f)
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (len(c), c))
    return ExponentOrbit(n, tuple(classes))


def cubic_orbit_classes() -> ExponentOrbit:
    """Characters with t1 t2^2 = 1 and t1^7 t2^2 = 1, up to the D6 action.

    Dividing the two equations gives t1^6 = 1, and t1 = t2^-2 then forces
    t2^12 = 1; the characters are t2 = exp(2 pi i e / 12).  Multiplying t2 by
    a cube root of unity (e -> e + 4) and complex conjugation (e -> -e)
    generate the action.
    """
    n = 12
    return orbit_partition(n, [lambda e: e + n // 3, lambda e: -e])


# -- plane curves --------------------------------------------------------------

Monomial = tuple[int, int, int]


@dataclass(frozen=True)
class HomogeneousPoly:
    """Integer polynomial in x, y, z with all terms of the same degree."""

    terms: Mapping[Monomial, int]

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(a) for a in e)
            if len(e) != 3 or min(e) < 0:
                raise ZvkError(f"bad exponent triple {e}")
            if c:
                clean[e] = int(c)
        degrees = {sum(e) for e in clean}
        if len(degrees) > 1:
            raise ZvkError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
        object.__setattr__(self, "terms", clean)

    @property
    def degree(self) -> int:
        return sum(next(iter(self.terms))) if self.terms else 0

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        out: dict[Monomial, int] = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                m = (e[0] + f[0], e[1] + f[1], e[2] + f[2])
                out[m] = out.get(m, 0) + c * d
        return HomogeneousPoly(out)

    def __call__(self, p: Sequence[int]) -> int:
        x, y, z = p
        return sum(c * x ** a * y ** b * z ** d for (a, b, d), c in self.terms.items())

    def derivative(self, var: int) -> "HomogeneousPoly":
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                f = list(e)
                f[var] -= 1
                out[tuple(f)] = c * e[var]
        return HomogeneousPoly(out)

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coef": c} for e, c in sorted(self.terms.items(), reverse=True)]}

    @classmethod
    def from_json(cls, data) -> "HomogeneousPoly":
        try:
            return cls({tuple(t["exp"]): t["coef"] for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad polynomial: {exc}") from exc


def singular_point_check(f: HomogeneousPoly, point: Sequence[int]) -> bool:
    """True iff f and its three partials vanish at the projective point."""
    if len(point) != 3 or not any(point):
        raise ZvkError("point must be a nonzero integer triple")
    return f(point) == 0 and all(f.derivative(v)(point) == 0 for v in range(3))


def _poly(*terms) -> HomogeneousPoly:
    return HomogeneousPoly({e: c for c, e in terms})


# the two sextics, each a conic times a quartic
CURVES = {
    "c1_conic": _poly((8, (0, 0, 2)), (-20, (0, 1, 1)), (36, (1, 0, 1)), (17, (0, 2, 0)), (-18, (1, 1, 0))),
    "c1_quartic": _poly((8, (2, 0, 2)), (-16, (1, 2, 1)), (52, (2, 1, 1)), (-36, (3, 0, 1)),
                        (-37, (2, 2, 0)), (18, (3, 1, 0)), (-1, (0, 4, 0)), (20, (1, 3, 0))),
    "c2_conic": _poly((3, (2, 0, 0)), (2, (1, 1, 0)), (108, (0, 0, 2))),
    "c2_quartic": _poly((2, (1, 3, 0)), (3, (2, 2, 0)), (108, (0, 2, 2)), (-1, (4, 0, 0))),
}
CURVES["c1"] = CURVES["c1_conic"] * CURVES["c1_quartic"]
CURVES["c2"] = CURVES["c2_conic"] * CURVES["c2_quartic"]

# (point, singularity type) as stated for each sextic; types are not verified
SINGULAR_POINTS = {
    "c1": [((1, 0, 0), "A15"), ((0, 0, 1), "A3"), ((1, 1, 0), "A1")],
    "c2": [((0, 1, 0), "A15"), ((0, 0, 1), "A3"), ((1, -1, 0), "A1")],
}


# -- lattices --------------------------------------------------------------------

@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(v) for v in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ZvkError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ZvkError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def dimension(self) -> int:
        return len(self.gram)


def scalar_lattice(value: int) -> GramLattice:
    return GramLattice(((value,),))


def a_chain_lattice(k: int) -> GramLattice:
    """k (-2)-curves in a chain: -2 on the diagonal, 1 between neighbours."""
    if k < 1:
        raise ZvkError("chain length must be positive")
    return GramLattice(tuple(tuple(-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(k))
                             for i in range(k)))


def direct_sum(ls: Iterable[GramLattice]) -> GramLattice:
    ls = list(ls)
    n = sum(l.dimension for l in ls)
    out = [[0] * n for _ in range(n)]
    at = 0
    for l in ls:
        for i, row in enumerate(l.gram):
            out[at + i][at:at + l.dimension] = row
        at += l.dimension
    return GramLattice(tuple(map(tuple, out)))


def _det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def disc(l: GramLattice) -> int:
    return abs(_det(l.gram))


def lattice_from_spec(spec: Mapping) -> GramLattice:
    """``{"summands": [{"type": "scalar", "value": 2}, {"type": "A", "k": 15}, ...]}``"""
    try:
        parts = []
        for s in spec["summands"]:
            if s["type"] == "scalar":
                parts.append(scalar_lattice(s["value"]))
            elif s["type"] == "A":
                parts.append(a_chain_lattice(s["k"]))
            elif s["type"] == "gram":
                parts.append(GramLattice(s["matrix"]))
            else:
                raise SchemaError(f"unknown summand type {s['type']!r}")
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad lattice spec: {exc}") from exc
    if not parts:
        raise SchemaError("lattice spec has no summands")
    return direct_sum(parts)


def load_lattice(path) -> GramLattice:
    with open(path) as fh:
        try:
            return lattice_from_spec(json.load(fh))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: {exc}") from exc


def torsion_obstruction(disc_t: int, disc_ns: int, n: int) -> str:
    """n-torsion in NS/T makes T of index >= n in its saturation, so
    disc(NS) <= disc(T) / n^2; anything larger is OBSTRUCTED."""
    if min(disc_t, disc_ns, n) <= 0:
        raise ZvkError("discriminants and n must be positive")
    return COMPATIBLE if disc_ns * n * n <= disc_t else OBSTRUCTED


def q_relation_check(g: GramLattice, coeffs: Sequence, sub: Iterable[int]) -> bool:
    """v = sum coeffs[i] e_i satisfies v.v = 0 and v.e_j = 0 for j in sub."""
    c = [Fraction(x) for x in coeffs]
    if len(c) != g.dimension:
        raise ZvkError(f"{len(c)} coefficients for a lattice of dimension {g.dimension}")
    pair = [sum(g.gram[j][i] * c[i] for i in range(len(c))) for j in range(len(c))]
    if sum(ci * p for ci, p in zip(c, pair)) != 0:
        return False
    return all(pair[j] == 0 for j in sub)


def tangent_line_configuration() -> tuple[GramLattice, list[str]]:
    """Intersection matrix of L+, f*L_inf, Theta_{1..15,1}, Theta_{1..3,2}.

    Derived by hand from the resolution of the tangency: the
    Theta form A_15 and A_3 chains, f*L_inf has square 2 and misses them,
    L+ is a (-2)-curve meeting f*L_inf, Theta_{2,1} and Theta_{1,2} once.
    """
    names = ["L+", "fL"] + [f"T{k},1" for k in range(1, 16)] + [f"T{k},2" for k in range(1, 4)]
    base = direct_sum([scalar_lattice(-2), scalar_lattice(2), a_chain_lattice(15), a_chain_lattice(3)])
    m = [list(row) for row in base.gram]
    for other in ("fL", "T2,1", "T1,2"):
        j = names.index(other)
        m[0][j] = m[j][0] = 1
    return GramLattice(tuple(map(tuple, m))), names


def tangent_line_relation() -> list[Fraction]:
    """Coefficients of L+ - f*L_inf/2 + (7 T1 + sum (16-k) Tk)/8 + sum (4-k) T'k / 4."""
    c = [Fraction(1), Fraction(-1, 2), Fraction(7, 8)]
    c += [Fraction(16 - k, 8) for k in range(2, 16)]
    c += [Fraction(4 - k, 4) for k in range(1, 4)]
    return c
