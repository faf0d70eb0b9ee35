"""Reduced fractions of multivariate integer polynomials (flint backend).

This is the working field for R-matrix computations: Q(q, z) in the default
context, or any other variable set (e.g. Q(x, y) after specializing q).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import flint


class FracZeroDivision(ZeroDivisionError):
    """Raised when dividing by a zero fraction."""


def context(*names: str) -> flint.fmpz_mpoly_ctx:
    return flint.fmpz_mpoly_ctx.get(tuple(names), "lex")


QZ = context("q", "z")


class Frac:
    """num/den with gcd(num, den) = 1 and den having positive leading coefficient."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den=None, *, reduced=False):
        self.ctx = ctx
        if den is None:
            self.num = num
            self.den = ctx.from_dict({(0,) * ctx.nvars(): 1})
            return
        if den.is_zero():
            raise FracZeroDivision("zero denominator")
        if not reduced:
            if num.is_zero():
                den = ctx.from_dict({(0,) * ctx.nvars(): 1})
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den

    # constructors ---------------------------------------------------------------

    @classmethod
    def const(cls, ctx, c) -> "Frac":
        c = Fraction(c)
        zero = (0,) * ctx.nvars()
        return cls(ctx, ctx.from_dict({zero: c.numerator}), ctx.from_dict({zero: c.denominator}),
                   reduced=True)

    @classmethod
    def monomial(cls, ctx, exps: Mapping[str, int], c=1) -> "Frac":
        """c * prod(var**e), negative exponents allowed."""
        names = ctx.names()
        up = [0] * len(names)
        down = [0] * len(names)
        for name, e in exps.items():
            k = names.index(name)
            if e >= 0:
                up[k] += e
            else:
                down[k] -= e
        c = Fraction(c)
        num = ctx.from_dict({tuple(up): c.numerator})
        den = ctx.from_dict({tuple(down): abs(c.denominator)})
        return cls(ctx, num, den, reduced=True)

    @classmethod
    def gen(cls, ctx, name: str) -> "Frac":
        return cls.monomial(ctx, {name: 1})

    def _coerce(self, x):
        if isinstance(x, Frac):
            if x.ctx is not self.ctx:
                raise TypeError("fractions from different contexts")
            return x
        if isinstance(x, (int, Fraction)):
            return Frac.const(self.ctx, x)
        return NotImplemented

    # predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return Frac(self.ctx, self.num + other.num)
        if self.den == other.den:
            return Frac(self.ctx, self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return Frac(self.ctx, self.num * other.den + other.num * self.den,
                        self.den * other.den)
        a = other.den / g
        b = self.den / g
        return Frac(self.ctx, self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __neg__(self):
        return Frac(self.ctx, -self.num, self.den, reduced=True)

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
        if self.num.is_zero() or other.num.is_zero():
            return Frac(self.ctx, self.ctx.from_dict({}))
        if self.den.is_one() and other.den.is_one():
            return Frac(self.ctx, self.num * other.num)
        # cross-cancel to keep the operands small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num / g1, other.den / g1) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num / g2, self.den / g2) if not g2.is_one() else (other.num, self.den)
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Frac(self.ctx, num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if self.num.is_zero():
            raise FracZeroDivision("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Frac(self.ctx, num, den, reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Frac(self.ctx, self.num**k, self.den**k, reduced=True)

    # comparison -----------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.to_dict().items()), tuple(self.den.to_dict().items())))

    def __repr__(self):
        return f"Frac({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # substitution -----------------------------------------------------------------

    def substitute(self, target, images: Mapping[str, object]) -> "Frac":
        """Evaluate at images of the variables; result lives in context ``target``.

        Each variable of ``self.ctx`` must have an image (a Frac of ``target``, an
        int or a Fraction).
        """
        imgs = []
        for name in self.ctx.names():
            v = images[name]
            imgs.append(v if isinstance(v, Frac) else Frac.const(target, v))
        return evaluate_poly(self.num, imgs, target) / evaluate_poly(self.den, imgs, target)


def evaluate_poly(p, imgs, target) -> Frac:
    """Evaluate an fmpz_mpoly at a tuple of Frac values, clearing denominators once."""
    if p.is_zero():
        return Frac.const(target, 0)
    terms = p.to_dict()
    nv = len(imgs)
    maxdeg = [max(e[k] for e in terms) for k in range(nv)]
    # value of var k is a_k / b_k; multiply through by prod b_k^maxdeg_k
    num_pows = []
    den_pows = []
    for k, v in enumerate(imgs):
        a, b = v.num, v.den
        num_pows.append(_powers(a, maxdeg[k]))
        den_pows.append(_powers(b, maxdeg[k]))
    total = target.from_dict({})
    for e, c in terms.items():
        t = target.from_dict({(0,) * target.nvars(): int(c)})
        for k in range(nv):
            if maxdeg[k]:
                t = t * num_pows[k][e[k]] * den_pows[k][maxdeg[k] - e[k]]
        total += t
    den = target.from_dict({(0,) * target.nvars(): 1})
    for k in range(nv):
        if maxdeg[k]:
            den = den * den_pows[k][maxdeg[k]]
    return Frac(target, total, den)


def _powers(a, d):
    out = [a.context().from_dict({(0,) * a.context().nvars(): 1})]
    for _ in range(d):
        out.append(out[-1] * a)
    return out


def q_of(ctx=QZ) -> Frac:
    return Frac.gen(ctx, "q")


def z_of(ctx=QZ) -> Frac:
    return Frac.gen(ctx, "z")


def neg_q_power(s: int, ctx=QZ) -> Frac:
    """(-q)^s as the signed monomial (-1)^s q^s."""
    return Frac.monomial(ctx, {"q": s}, -1 if s % 2 else 1)
