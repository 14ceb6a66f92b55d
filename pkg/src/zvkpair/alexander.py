"""Fox calculus, Alexander matrices, Fitting ideals and torsion-point scans.

Generators are sent to monomials of Z[t_1^+-1, ..., t_r^+-1] by an
:class:`AbelianLabel`, normally "meridian of component c -> t_c".  The
Alexander matrix holds the abelianized Fox derivatives of the relators; the
ideal of its ``(rank - k)``-minors cuts out the k-th characteristic variety,
which is scanned exactly on the grid of N-torsion points of the torus.

The labels of a projective presentation are not a homomorphism of the group
(the relator sending every meridian around the line at infinity is not
killed), so the trivial character is not automatically a zero of the minors.
The Fitting ideals are therefore taken as (augmentation ideal) x (minors),
which puts the trivial character back and matches the product form
``(t_1 - 1, t_2 - 1) * (...)`` the ideals are usually written in.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import cyclotomic as cy
from .cyclotomic import CyclotomicValue
from .errors import IndexRangeError, SchemaError, ZvkError
from .laurent import Exponent, LaurentPoly, determinant
from .words import Word
from .zvk import GroupPresentation

DEFAULT_SCAN_ORDER = 24

# F_k = I * (minors of size rank - k - FITTING_OFFSET), I the augmentation
# ideal; see calibrate_fitting_offset().
FITTING_OFFSET = 0


@dataclass(frozen=True)
class AbelianLabel:
    """Generator index -> exponent vector in Z^r."""

    images: Mapping[int, Exponent]
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "images", {int(g): tuple(v) for g, v in self.images.items()})
        for g, v in self.images.items():
            if len(v) != self.nvars:
                raise ZvkError(f"label of generator {g} has length {len(v)}, expected {self.nvars}")

    @classmethod
    def by_component(cls, components: Sequence[str], order: Sequence[str] | None = None) -> "AbelianLabel":
        """Send generator i to the basis vector of its component.

        ``components[i - 1]`` names the component of generator i; ``order``
        fixes which component becomes t_1, t_2, ... (default: first seen).
        """
        if order is None:
            order = list(dict.fromkeys(components))
        pos = {c: k for k, c in enumerate(order)}
        images = {}
        for i, c in enumerate(components, start=1):
            if c not in pos:
                raise ZvkError(f"component {c!r} of generator {i} not in {list(order)}")
            v = [0] * len(order)
            v[pos[c]] = 1
            images[i] = tuple(v)
        return cls(images, len(order))

    def of(self, g: int) -> Exponent:
        try:
            return self.images[g]
        except KeyError:
            raise IndexRangeError(f"generator {g} has no abelian label") from None

    def to_json(self) -> dict:
        return {"vars": self.nvars, "images": {str(g): list(v) for g, v in sorted(self.images.items())}}

    @classmethod
    def from_json(cls, data) -> "AbelianLabel":
        try:
            return cls({int(g): tuple(v) for g, v in data["images"].items()}, data["vars"])
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SchemaError(f"bad label document: {exc}") from exc


def _add(e: Exponent, f: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(e, f))


def _sub(e: Exponent, f: Exponent) -> Exponent:
    return tuple(a - b for a, b in zip(e, f))


def abelianize_word(w: Word, lab: AbelianLabel) -> Exponent:
    e = (0,) * lab.nvars
    for x in w:
        e = _add(e, lab.of(x)) if x > 0 else _sub(e, lab.of(-x))
    return e


def fox_derivative_abelianized(w: Word, j: int, lab: AbelianLabel) -> LaurentPoly:
    """phi(dw/dx_j) using d(uv) = du + phi(u) dv, dx_j = 1, dx_j^-1 = -x_j^-1."""
    terms: dict[Exponent, int] = {}
    prefix = (0,) * lab.nvars
    for x in w:
        g = abs(x)
        if x > 0:
            if g == j:
                terms[prefix] = terms.get(prefix, 0) + 1
            prefix = _add(prefix, lab.of(g))
        else:
            prefix = _sub(prefix, lab.of(g))
            if g == j:
                terms[prefix] = terms.get(prefix, 0) - 1
    return LaurentPoly(lab.nvars, terms)


def alexander_matrix(p: GroupPresentation, lab: AbelianLabel) -> list[list[LaurentPoly]]:
    for g in range(1, p.rank + 1):
        lab.of(g)
    return [[fox_derivative_abelianized(r, j, lab) for j in range(1, p.rank + 1)] for r in p.relators]


def minors(m: Sequence[Sequence[LaurentPoly]], size: int, ncols: int, nvars: int) -> list[LaurentPoly]:
    if size == 0:
        return [LaurentPoly.constant(nvars, 1)]
    if size > len(m) or size > ncols:
        return []
    out = []
    for rows in itertools.combinations(range(len(m)), size):
        for cols in itertools.combinations(range(ncols), size):
            d = determinant([[m[i][j] for j in cols] for i in rows], nvars)
            if d:
                out.append(d)
    return out


def elementary_ideal(m: Sequence[Sequence[LaurentPoly]], size: int, rank: int, nvars: int) -> list[LaurentPoly]:
    """Nonzero minors of the given size, deduplicated in order of appearance.

    ``[1]`` for size <= 0, ``[0]`` when every minor vanishes or none exist.
    """
    if size <= 0:
        return [LaurentPoly.constant(nvars, 1)]
    gens = list(dict.fromkeys(minors(m, size, rank, nvars)))
    return gens or [LaurentPoly.zero(nvars)]


def augmentation_ideal(nvars: int) -> list[LaurentPoly]:
    return [LaurentPoly.var(nvars, i) - 1 for i in range(1, nvars + 1)]


def fitting_ideal(m: Sequence[Sequence[LaurentPoly]], k: int, rank: int, nvars: int,
                  offset: int = FITTING_OFFSET) -> list[LaurentPoly]:
    """Generators of F_k = (t_1 - 1, ..., t_r - 1) * E, E the ideal of
    ``(rank - k - offset)``-minors.

    The zero locus is the trivial character together with the zeros of E.
    A zero ideal comes back as ``[0]``.
    """
    if not 0 <= k <= rank:
        raise ZvkError(f"k must lie in 0..{rank}, got {k}")
    e = elementary_ideal(m, rank - k - offset, rank, nvars)
    if e == [LaurentPoly.zero(nvars)]:
        return e
    return list(dict.fromkeys(a * g for g in e for a in augmentation_ideal(nvars)))


@dataclass(frozen=True, order=True)
class CharacterPoint:
    """Torus point t_i = exp(2 pi i q_i) with rational q_i in [0, 1)."""

    q: tuple[Fraction, ...]

    def __post_init__(self):
        q = tuple(Fraction(x) for x in self.q)
        for x in q:
            if not 0 <= x < 1:
                raise ZvkError(f"coordinate {x} outside [0, 1)")
        object.__setattr__(self, "q", q)

    @property
    def order(self) -> int:
        return lcm(*(x.denominator for x in self.q)) if self.q else 1

    def to_json(self) -> dict:
        return {"q": [f"{x.numerator}/{x.denominator}" for x in self.q]}

    @classmethod
    def from_json(cls, data) -> "CharacterPoint":
        try:
            return cls(tuple(Fraction(s) for s in data["q"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad character point: {exc}") from exc

    def __str__(self) -> str:
        return "(" + ",".join(_root_name(x) for x in self.q) + ")"


_NAMED_ROOTS = {Fraction(0): "1", Fraction(1, 2): "-1", Fraction(1, 4): "i", Fraction(3, 4): "-i"}


def _root_name(x: Fraction) -> str:
    return _NAMED_ROOTS.get(x, f"e({x})")


def evaluate(poly: LaurentPoly, pt: CharacterPoint, order: int | None = None) -> CyclotomicValue:
    """Exact value of ``poly`` at ``pt`` inside Q(zeta_N).

    N defaults to the lcm of the denominators of the point; a multiple may be
    passed to compare values computed at different points.
    """
    n = pt.order if order is None else order
    if n % pt.order:
        raise ZvkError(f"order {n} is not a multiple of the point's order {pt.order}")
    steps = [int(x * n) for x in pt.q]
    powers = [0] * n
    for e, c in poly.terms.items():
        k = sum(a * s for a, s in zip(e, steps)) % n
        powers[k] += c
    return CyclotomicValue.from_powers(n, powers)


def _vanishes(gens: Sequence[LaurentPoly], pt: CharacterPoint) -> bool:
    return all(evaluate(g, pt).is_zero() for g in gens)


def _scan_chunk(gens, points):
    return [pt for pt in points if _vanishes(gens, pt)]


def charvar_points(gens: Sequence[LaurentPoly], n: int = DEFAULT_SCAN_ORDER, nvars: int | None = None,
                   jobs: int = 1) -> list[CharacterPoint]:
    """All N-torsion points of the torus where every generator vanishes, sorted."""
    if n < 1:
        raise ZvkError("scan order must be positive")
    if nvars is None:
        if not gens:
            raise ZvkError("cannot infer the number of variables from an empty ideal")
        nvars = gens[0].nvars
    grid = [CharacterPoint(tuple(Fraction(a, n) for a in idx))
            for idx in itertools.product(range(n), repeat=nvars)]
    if jobs <= 1:
        return sorted(_scan_chunk(gens, grid))
    chunks = [grid[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        found = pool.map(_scan_chunk, [gens] * jobs, chunks)
    return sorted(pt for part in found for pt in part)


def char_variety(p: GroupPresentation, lab: AbelianLabel, k: int = 1, n: int = DEFAULT_SCAN_ORDER,
                 jobs: int = 1) -> list[CharacterPoint]:
    gens = fitting_ideal(alexander_matrix(p, lab), k, p.rank, lab.nvars)
    return charvar_points(gens, n, lab.nvars, jobs)


def alexander_polynomial(gens: Iterable[LaurentPoly]) -> tuple[int, ...]:
    """gcd over Q[t, t^-1] of the ideal after t_i -> t.

    Normalized to coprime integer coefficients, positive leading coefficient
    and nonzero constant term; ``(0,)`` for the zero ideal.
    """
    g: cy.Poly = ()
    for f in gens:
        spec = f.specialize()
        if not spec:
            continue
        lo = min(spec)
        dense = cy.normalize([spec.get(lo + i, 0) for i in range(max(spec) - lo + 1)])
        g = cy.gcd_poly(g, dense) if g else cy.monic(dense)
    if not g:
        return (0,)
    return cy.primitive_integer(g)


def calibrate_fitting_offset(p: GroupPresentation, lab: AbelianLabel, k: int,
                             expected: Sequence[CharacterPoint], n: int = DEFAULT_SCAN_ORDER) -> int:
    """Pick the minor-size offset whose F_k locus on ``p`` equals ``expected``.

    Candidate minor sizes are rank-k, rank-k-1 and rank-1 (offsets 0, 1 and
    1-k).  The first candidate that matches wins.
    """
    m = alexander_matrix(p, lab)
    for offset in (0, 1, 1 - k):
        gens = fitting_ideal(m, k, p.rank, lab.nvars, offset=offset)
        if charvar_points(gens, n, lab.nvars) == sorted(expected):
            return offset
    raise ZvkError("no Fitting convention reproduces the expected locus")
