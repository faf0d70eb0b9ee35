"""Laurent polynomials in the quantum parameter q with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Element of Q[q, q^-1], stored as a sparse exponent -> coefficient map.

    Instances are immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def neg_q_power(cls, s: int) -> "LaurentPoly":
        """(-q)^s written as the monomial (-1)^s q^s."""
        return cls({s: -1 if s % 2 else 1})

    @classmethod
    def quantum_integer(cls, a: int) -> "LaurentPoly":
        """[a]_q = (q^a - q^-a)/(q - q^-1)."""
        if a == 0:
            return cls()
        sign = 1 if a > 0 else -1
        a = abs(a)
        return cls({e: sign for e in range(-a + 1, a, 2)})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero")
        return max(self._terms)

    def coefficient(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree()]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    # arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in Q[q, q^-1]")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: Fraction(1) / c ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_terms(self._terms, "q")


def format_terms(terms: Mapping[int, Fraction], var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def sum_laurent(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly()
    for x in items:
        out = out + x
    return out
