"""Rational functions in q over Q, kept in a reduced canonical form.

A value is stored as ``q**shift * num / den`` where ``num`` and ``den`` are
polynomials in q (flint ``fmpq_poly``) with nonzero constant terms, coprime,
and ``den`` has constant term 1.  With that normalization two equal rational
functions have identical stored data, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

import flint

from .laurent import LaurentPoly


class RatFuncZeroDivision(ZeroDivisionError):
    """Raised when dividing by the zero rational function."""


def _strip_q(p: flint.fmpq_poly) -> tuple[int, flint.fmpq_poly]:
    if p.is_zero():
        return 0, p
    coeffs = p.coeffs()
    k = 0
    while coeffs[k] == 0:
        k += 1
    return k, flint.fmpq_poly(coeffs[k:])


def _to_fraction(c) -> Fraction:
    c = flint.fmpq(c)
    return Fraction(int(c.p), int(c.q))


class RatFunc:
    __slots__ = ("shift", "num", "den")

    def __init__(self, num=0, den=1, shift: int = 0, *, _normalized=False):
        if _normalized:
            self.shift, self.num, self.den = shift, num, den
            return
        num = _as_qpoly(num)
        den = _as_qpoly(den)
        if den.is_zero():
            raise RatFuncZeroDivision("zero denominator")
        if num.is_zero():
            self.shift, self.num, self.den = 0, flint.fmpq_poly(0), flint.fmpq_poly(1)
            return
        a, num = _strip_q(num)
        b, den = _strip_q(den)
        g = num.gcd(den)
        if not g.is_constant():
            num = num / g
            den = den / g
        c0 = den.coeffs()[0]
        self.shift = shift + a - b
        self.num = num / c0
        self.den = den / c0

    # constructors ------------------------------------------------------------

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        if p.is_zero():
            return cls()
        lo = p.valuation()
        coeffs = [0] * (p.degree() - lo + 1)
        for e, c in p.terms.items():
            coeffs[e - lo] = flint.fmpq(c.numerator, c.denominator)
        return cls(flint.fmpq_poly(coeffs), 1, lo)

    @classmethod
    def q_power(cls, e: int, c=1) -> "RatFunc":
        return cls(flint.fmpq_poly([_fmpq(c)]), 1, e)

    @classmethod
    def neg_q_power(cls, s: int) -> "RatFunc":
        return cls.q_power(s, -1 if s % 2 else 1)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls.from_laurent(x)
        if isinstance(x, (int, Fraction)):
            return cls(flint.fmpq_poly([_fmpq(x)]))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    # views -----------------------------------------------------------------

    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly({i + self.shift: _to_fraction(c)
                            for i, c in enumerate(self.num.coeffs())})

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly({i: _to_fraction(c) for i, c in enumerate(self.den.coeffs())})

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_unit_monomial(self) -> bool:
        return self.den.is_one() and self.num.degree() == 0

    def evaluate(self, x) -> Fraction:
        x = flint.fmpq(Fraction(x).numerator, Fraction(x).denominator)
        d = self.den(x)
        if d == 0:
            raise RatFuncZeroDivision("pole at evaluation point")
        return _to_fraction(self.num(x) / d * x**self.shift)

    # arithmetic --------------------------------------------------------------

    def _split(self):
        """Return (num, den) as plain polynomials representing the value."""
        if self.shift >= 0:
            return self.num * flint.fmpq_poly([0] * self.shift + [1]), self.den
        return self.num, self.den * flint.fmpq_poly([0] * (-self.shift) + [1])

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        s = min(self.shift, other.shift)
        a = self.num * _qpow(self.shift - s)
        b = other.num * _qpow(other.shift - s)
        if self.den == other.den:
            return RatFunc(a + b, self.den, s)
        return RatFunc(a * other.den + b * self.den, self.den * other.den, s)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.shift, _normalized=True)

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc()
        return RatFunc(self.num * other.num, self.den * other.den, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise RatFuncZeroDivision("inverse of zero")
        return RatFunc(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k, self.shift * k)

    def bar(self) -> "RatFunc":
        """Substitute q -> q^-1."""
        if self.is_zero():
            return self
        dn, dd = self.num.degree(), self.den.degree()
        rn = flint.fmpq_poly(list(reversed(self.num.coeffs())))
        rd = flint.fmpq_poly(list(reversed(self.den.coeffs())))
        return RatFunc(rn, rd, -self.shift - dn + dd)

    # comparison ----------------------------------------------------------------

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.shift, tuple(self.num.coeffs()), tuple(self.den.coeffs())))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = str(self.numerator)
        if self.den.is_one():
            return n
        return f"({n})/({self.denominator})"


def _fmpq(c) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _qpow(k: int) -> flint.fmpq_poly:
    return flint.fmpq_poly([0] * k + [1])


def _as_qpoly(x) -> flint.fmpq_poly:
    if isinstance(x, flint.fmpq_poly):
        return x
    if isinstance(x, (int, Fraction)):
        return flint.fmpq_poly([_fmpq(x)])
    if isinstance(x, (list, tuple)):
        return flint.fmpq_poly([_fmpq(c) for c in x])
    return flint.fmpq_poly(x)


Q = RatFunc.q_power(1)
ONE = RatFunc(1)
ZERO = RatFunc()
