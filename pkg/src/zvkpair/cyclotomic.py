"""Dense univariate polynomials over Q and exact arithmetic in Q(zeta_N).

Polynomials are tuples of coefficients, lowest degree first, without
trailing zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

Poly = tuple[Fraction, ...]


def normalize(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = r[k + len(q) - 1] / lead
        if c:
            quot[k] = c
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return normalize(quot), normalize(r[:len(q) - 1])


def monic(p: Poly) -> Poly:
    return tuple(c / p[-1] for c in p) if p else p


def gcd_poly(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q (``()`` when both are zero)."""
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def primitive_integer(p: Poly) -> tuple[int, ...]:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError("n must be positive")
    p = normalize([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            p, r = divmod_poly(p, cyclotomic_polynomial(d))
            assert not r
    return p


def format_poly(p: Sequence[int], var: str = "t") -> str:
    if not any(p):
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class CyclotomicValue:
    """Element of Q(zeta_N) = Q[x]/Phi_N, stored reduced (so zero test is exact)."""

    order: int
    coeffs: Poly

    @classmethod
    def from_powers(cls, order: int, powers: Sequence) -> "CyclotomicValue":
        """Value of sum_k powers[k] zeta_N^k."""
        return cls(order, divmod_poly(normalize(powers), cyclotomic_polynomial(order))[1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "CyclotomicValue") -> None:
        if self.order != other.order:
            raise ValueError(f"values live in Q(zeta_{self.order}) and Q(zeta_{other.order})")

    def __add__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        self._check(other)
        return CyclotomicValue(self.order, add(self.coeffs, other.coeffs))

    def __mul__(self, other: "CyclotomicValue") -> "CyclotomicValue":
        self._check(other)
        return CyclotomicValue(self.order,
                               divmod_poly(mul(self.coeffs, other.coeffs), cyclotomic_polynomial(self.order))[1])

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(c) * z ** k for k, c in enumerate(self.coeffs))
