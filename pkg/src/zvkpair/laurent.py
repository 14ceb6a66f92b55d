"""Multivariate Laurent polynomials with integer coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import SchemaError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPoly:
    """Element of Z[t_1^+-1, ..., t_r^+-1]; zero coefficients are never stored."""

    nvars: int
    terms: Mapping[Exponent, int]

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self.nvars} variables")
            if c:
                clean[e] = int(c)
        object.__setattr__(self, "terms", clean)

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "LaurentPoly":
        """t_i (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError("polynomials in different numbers of variables")
        return other

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly(self.nvars, {tuple(k * n for k in e): c ** -n})
        out = LaurentPoly.constant(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exp: Exponent) -> "LaurentPoly":
        """Multiply by the monomial t^exp."""
        return LaurentPoly(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def specialize(self) -> dict[int, int]:
        """Substitute t_i -> t for every i; returns {degree: coefficient}."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            d = sum(e)
            out[d] = out.get(d, 0) + c
        return {d: c for d, c in out.items() if c}

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> dict:
        return {"vars": self.nvars,
                "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        try:
            nvars = data["vars"]
            return cls(nvars, {tuple(t["exp"]): t["coef"] for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad Laurent polynomial: {exc}") from exc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"t{i + 1}" if k == 1 else f"t{i + 1}^{k}" for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def determinant(m: list[list[LaurentPoly]], nvars: int) -> LaurentPoly:
    """Laplace expansion along the first row; fine for the small minors used here."""
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(nvars, 1)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    out = LaurentPoly.zero(nvars)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * determinant(sub, nvars)
        out = out + term if j % 2 == 0 else out - term
    return out
