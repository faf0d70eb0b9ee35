"""Formal products of infinite q-Pochhammer symbols [m] = ((-q)^m z; q^{4n-4})_oo.

Only two rules are used: substituting z -> (-q)^t z shifts every index by t,
and [m] / [m + 4n - 4] equals (z - (-q)^{-m}) up to a unit c z^k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .cartan import CartanType, star_involution
from .denominators import denom_D


class IndexOverflow(ValueError):
    pass


def _period(n: int) -> int:
    return 4 * n - 4


class PochExpr:
    """prod [m]^e for the rank-n period 4n - 4."""

    __slots__ = ("n", "factors")

    def __init__(self, n: int, factors: Mapping[int, int] | None = None):
        self.n = n
        bound = 8 * n
        clean = {}
        for m, e in (factors or {}).items():
            if e:
                if abs(m) > bound:
                    raise IndexOverflow(f"index {m} beyond the guard 8n = {bound}")
                clean[int(m)] = int(e)
        self.factors = clean

    @classmethod
    def ratio(cls, n: int, num: list[int], den: list[int]) -> "PochExpr":
        c = Counter(num)
        c.subtract(den)
        return cls(n, c)

    def _same(self, other: "PochExpr"):
        if self.n != other.n:
            raise ValueError("rank parameters differ")

    def __mul__(self, other: "PochExpr") -> "PochExpr":
        self._same(other)
        c = Counter(self.factors)
        c.update(other.factors)
        return PochExpr(self.n, c)

    def __truediv__(self, other: "PochExpr") -> "PochExpr":
        self._same(other)
        c = Counter(self.factors)
        c.subtract(other.factors)
        return PochExpr(self.n, c)

    def __pow__(self, k: int) -> "PochExpr":
        return PochExpr(self.n, {m: e * k for m, e in self.factors.items()})

    def __eq__(self, other):
        return isinstance(other, PochExpr) and self.n == other.n and self.factors == other.factors

    def __hash__(self):
        return hash((self.n, frozenset(self.factors.items())))

    def __repr__(self):
        return f"PochExpr(n={self.n}, {self})"

    def __str__(self):
        if not self.factors:
            return "1"
        num = [f"[{m}]" + (f"^{e}" if e > 1 else "") for m, e in sorted(self.factors.items()) if e > 0]
        den = [f"[{m}]" + (f"^{-e}" if e < -1 else "") for m, e in sorted(self.factors.items()) if e < 0]
        return ("".join(num) or "1") + ("/" + "".join(den) if den else "")


def scale_z(e: PochExpr, t: int) -> PochExpr:
    """Substitute z -> (-q)^t z."""
    return PochExpr(e.n, {m + t: x for m, x in e.factors.items()})


@dataclass(frozen=True)
class LinearFactorForm:
    """prod (z - (-q)^t)^mult (mult may be negative) times a residual PochExpr."""

    factors: tuple[tuple[int, int], ...]  # sorted (t, multiplicity), nonzero
    residual: PochExpr

    @classmethod
    def from_counter(cls, c: Counter, residual: PochExpr) -> "LinearFactorForm":
        return cls(tuple(sorted((t, m) for t, m in c.items() if m)), residual)

    def is_unit(self) -> bool:
        return not self.factors and not self.residual.factors

    def as_counter(self) -> Counter:
        return Counter(dict(self.factors))


def reduce(e: PochExpr) -> LinearFactorForm:
    """Telescope each residue class mod 4n-4 onto its largest index.

    For m < M in one class, [m]/[M] is the product of (z - (-q)^{-(m+jN)})
    over m + jN < M.  What survives is [M]^E with E the class's total
    exponent; it is a pure linear-factor product exactly when every E is 0.
    """
    N = _period(e.n)
    classes: dict[int, dict[int, int]] = {}
    for m, x in e.factors.items():
        classes.setdefault(m % N, {})[m] = x
    lin: Counter = Counter()
    residual = {}
    for cls_items in classes.values():
        top = max(cls_items)
        total = 0
        for m, x in cls_items.items():
            total += x
            for idx in range(m, top, N):
                lin[-idx] += x
        if total:
            residual[top] = total
    return LinearFactorForm.from_counter(lin, PochExpr(e.n, residual))


def equiv(e1: PochExpr, e2: PochExpr) -> bool:
    """Equal up to a unit c z^k."""
    return reduce(e1 / e2).is_unit()


# ---------------------------------------------------------------------------
# the scalars a_{k,l}(z)

def _in_range(k: int, l: int, n: int) -> bool:
    small = range(1, n - 1)
    return (k in small and l in small) or (k in small and l == n) or (k == n and l in small)


def a_closed(k: int, l: int, n: int) -> PochExpr:
    if not _in_range(k, l, n):
        raise ValueError(f"no closed form for a_({k},{l}) at n={n}")
    if l == n or k == n:
        k = l if k == n else k
        return PochExpr.ratio(n, [n - k - 1, 3 * n + k - 3], [n + k - 1, 3 * n - k - 3])
    if k == l == 1:
        return PochExpr.ratio(n, [0, 2 * n, 2 * n - 4, 4 * n - 4],
                              [2, 2 * n - 2, 2 * n - 2, 4 * n - 6])
    if min(k, l) == 1:
        k = max(k, l)
        return PochExpr.ratio(n, [k - 1, 2 * n + k - 1, 2 * n - k - 3, 4 * n - k - 3],
                              [k + 1, 2 * n + k - 3, 2 * n - k - 1, 4 * n - k - 5])
    d = abs(k - l)
    return PochExpr.ratio(n, [d, 2 * n + k + l - 2, 2 * n - k - l - 2, 4 * n - d - 4],
                          [k + l, 2 * n + k - l - 2, 2 * n - k + l - 2, 4 * n - k - l - 4])


def a_recursive(k: int, l: int, n: int) -> PochExpr:
    """a_{k,l} built only from the base cases a_{1,1}, a_{1,n} and the recursions."""
    if not _in_range(k, l, n):
        raise ValueError(f"no recursion for a_({k},{l}) at n={n}")
    if k == n or l == n:
        m = l if k == n else k
        base = a_closed(1, n, n)
        if m == 1:
            return base
        return scale_z(a_recursive(n, m - 1, n), -1) * scale_z(base, m - 1)
    if k < l:
        k, l = l, k
    if l == 1:
        base = a_closed(1, 1, n)
        if k == 1:
            return base
        corr = PochExpr.ratio(n, [k - 1, 4 * n + k - 7], [k - 3, 4 * n + k - 5])
        return scale_z(a_recursive(1, k - 1, n), -1) * scale_z(base, k - 1) * corr
    return scale_z(a_recursive(k, l - 1, n), -1) * scale_z(a_recursive(k, 1, n), l - 1)


def in_range_pairs(n: int) -> list[tuple[int, int]]:
    return [(k, l) for k in range(1, n + 1) for l in range(1, n + 1) if _in_range(k, l, n)]


def denominator_ratio_form(k: int, l: int, n: int) -> Counter:
    """Linear factors of d_{k,l}(z) / d_{k*,l}(q^{2n-2} z^{-1}) up to units."""
    ks = star_involution(CartanType("D", n), k)
    c = Counter(denom_D(k, l, n).exponents)
    c.subtract(2 * n - 2 - s for s in denom_D(ks, l, n).exponents)
    return Counter({t: m for t, m in c.items() if m})


def check_ad_identity(k: int, l: int, n: int) -> bool:
    ks = star_involution(CartanType("D", n), k)
    prod = a_closed(k, l, n) * scale_z(a_closed(ks, l, n), -(2 * n - 2))
    red = reduce(prod)
    return not red.residual.factors and red.as_counter() == denominator_ratio_form(k, l, n)


def verify_rank(n: int) -> dict[str, bool]:
    rec = all(equiv(a_recursive(k, l, n), a_closed(k, l, n)) for k, l in in_range_pairs(n))
    ad = all(check_ad_identity(k, l, n) for k in range(1, n - 1) for l in range(1, n - 1))
    return {"recursive_vs_closed": rec, "ad_identity": ad}
