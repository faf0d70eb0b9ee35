"""Polynomials in the spectral variable z with coefficients in Q(q)."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .ratfunc import RatFunc


class PolyZ:
    """Dense coefficient list, index = z-degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [RatFunc.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def z(cls) -> "PolyZ":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "PolyZ":
        return cls([c])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "PolyZ":
        """prod (z - (-q)^s) over the multiset of exponents."""
        out = cls([1])
        for s in exponents:
            out = out * cls([-RatFunc.neg_q_power(s), 1])
        return out

    @classmethod
    def from_mpoly(cls, p, z_index: int = 1, q_index: int = 0) -> "PolyZ":
        """Read an fmpz_mpoly in (q, z) as a polynomial in z over Q(q)."""
        from .laurent import LaurentPoly

        by_deg: dict[int, dict[int, int]] = {}
        for e, c in p.to_dict().items():
            by_deg.setdefault(e[z_index], {})[e[q_index]] = int(c)
        if not by_deg:
            return cls()
        top = max(by_deg)
        return cls([RatFunc.from_laurent(LaurentPoly(by_deg.get(d, {}))) for d in range(top + 1)])

    # basic -------------------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading_coefficient(self) -> RatFunc:
        return self.coeffs[-1]

    def monic(self) -> "PolyZ":
        if not self.coeffs:
            raise ZeroDivisionError("monic of zero polynomial")
        lc = self.coeffs[-1]
        return PolyZ([c / lc for c in self.coeffs])

    def __call__(self, x) -> RatFunc:
        x = RatFunc.coerce(x)
        acc = RatFunc()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic ----------------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, PolyZ):
            return x
        try:
            return PolyZ([RatFunc.coerce(x)])
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (RatFunc(),) * (n - len(self.coeffs))
        b = other.coeffs + (RatFunc(),) * (n - len(other.coeffs))
        return PolyZ([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PolyZ([-c for c in self.coeffs])

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
        if not self.coeffs or not other.coeffs:
            return PolyZ()
        out = [RatFunc()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolyZ([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "PolyZ") -> tuple["PolyZ", "PolyZ"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        lc = other.leading_coefficient()
        quot = [RatFunc()] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            if c.is_zero():
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return PolyZ(quot), PolyZ(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other: "PolyZ") -> "PolyZ":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def lcm(self, other: "PolyZ") -> "PolyZ":
        if not self or not other:
            return PolyZ()
        return (self * other // self.gcd(other)).monic()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # factoring -----------------------------------------------------------------

    def factor_neg_q_powers(self, exponents: Iterable[int]) -> tuple[Counter, "PolyZ"]:
        """Divide out (z - (-q)^s) for candidate s as often as possible.

        Returns the multiset of roots found and the monic cofactor left over.
        """
        found: Counter = Counter()
        rest = self.monic()
        for s in exponents:
            lin = PolyZ([-RatFunc.neg_q_power(s), 1])
            while rest.degree() >= 1:
                quo, rem = rest.divmod(lin)
                if rem:
                    break
                found[s] += 1
                rest = quo
        return found, rest

    def __repr__(self):
        return f"PolyZ({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c.is_zero():
                continue
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            if d and c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
