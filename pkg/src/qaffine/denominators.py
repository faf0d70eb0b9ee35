"""Closed-form R-matrix denominators, pole orders, and the quiver Gamma^J
built from them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .cartan import CartanType, coxeter_number, simple_root
from .quiver import DynkinQuiver, HeightFunction, height_function
from .repetition import PhiTable, RepVertex, boundary_check, build_phi, m_i


class UnsupportedType(ValueError):
    """Denominators are only available for types A and D."""


E_TYPE_MESSAGE = (
    "denominators for exceptional types are not available: the correspondence between "
    "Gamma^J and the reversed quiver is only conjectural beyond types A and D"
)


@dataclass(frozen=True)
class DenominatorSpec:
    """d(z) = prod over the exponent multiset of (z - (-q)^s)."""

    family: str
    rank: int
    k: int
    l: int
    exponents: tuple[int, ...]

    def multiplicities(self) -> Counter:
        return Counter(self.exponents)

    def pole_order(self, m: int) -> int:
        if m <= 0:
            return 0
        return self.exponents.count(m)

    def degree(self) -> int:
        return len(self.exponents)

    def factored(self) -> str:
        if not self.exponents:
            return "1"
        parts = []
        for s, mult in sorted(self.multiplicities().items()):
            f = f"(z - (-q)^{s})"
            parts.append(f if mult == 1 else f"{f}^{mult}")
        return "".join(parts)

    def to_dict(self) -> dict:
        return {"type": self.family, "rank": self.rank, "k": self.k, "l": self.l,
                "exponents": list(self.exponents), "factored": self.factored()}


def _check_index(name, v, n):
    if not (1 <= v <= n):
        raise ValueError(f"{name}={v} outside 1..{n}")


def denom_D(k: int, l: int, n: int) -> DenominatorSpec:
    if n < 4:
        raise ValueError("type D needs rank >= 4")
    _check_index("k", k, n)
    _check_index("l", l, n)
    spin = {n - 1, n}
    if k in spin and l in spin:
        exps = [2 * s for s in range(1, n) if (s - (k - l + 1)) % 2 == 0]
    elif k in spin or l in spin:
        a = min(k, l)
        exps = [n - a - 1 + 2 * s for s in range(1, a + 1)]
    else:
        exps = []
        for s in range(1, min(k, l) + 1):
            exps.append(abs(k - l) + 2 * s)
            exps.append(2 * n - k - l - 2 + 2 * s)
    return DenominatorSpec("D", n, k, l, tuple(sorted(exps)))


def denom_A(k: int, l: int, n: int) -> DenominatorSpec:
    """Type A closed form {|k-l| + 2s : 1 <= s <= min(k, l, n+1-k, n+1-l)}.

    This formula is an external input; tests gate it against the intertwiner
    solver at small rank.
    """
    _check_index("k", k, n)
    _check_index("l", l, n)
    top = min(k, l, n + 1 - k, n + 1 - l)
    return DenominatorSpec("A", n, k, l, tuple(abs(k - l) + 2 * s for s in range(1, top + 1)))


def denominator(t: CartanType, k: int, l: int) -> DenominatorSpec:
    if t.family == "A":
        return denom_A(k, l, t.rank)
    if t.family == "D":
        return denom_D(k, l, t.rank)
    raise UnsupportedType(E_TYPE_MESSAGE)


def pole_order(d: DenominatorSpec, m: int) -> int:
    return d.pole_order(m)


def double_pole_predicate(i: int, j: int, s: int, n: int) -> bool:
    """Region where the type D denominator d_{i,j} has a double zero at (-q)^s."""
    return (2 <= i <= n - 2 and 2 <= j <= n - 2 and i + j >= n
            and 2 * n - i - j <= s <= i + j and (s - i - j) % 2 == 0)


# ---------------------------------------------------------------------------
# J and Gamma^J

@dataclass(frozen=True)
class JElement:
    vertex: RepVertex
    root_index: int  # t with phi(vertex) = (alpha_t, 0)
    h: int

    @property
    def i(self) -> int:
        return self.vertex[0]

    @property
    def p(self) -> int:
        return self.vertex[1]

    def spectral_exponent(self) -> int:
        """X(i,p) = (-q)^{p+h}."""
        return self.p + self.h


def build_J(Q: DynkinQuiver, xi: HeightFunction | None = None,
            phi: PhiTable | None = None) -> list[JElement]:
    xi = xi or height_function(Q)
    phi = phi or build_phi(Q, xi)
    t = Q.type
    h = coxeter_number(t)
    return [JElement(phi.inverse(simple_root(t, s), 0), s, h) for s in t.vertices]


@dataclass
class GammaJ:
    elements: list[JElement]
    multiplicity: dict[tuple[int, int], int]  # (a, b) positions in elements -> d_ab
    cartan: list[list[int]] = field(default_factory=list)

    def arrows(self) -> list[tuple[RepVertex, RepVertex, int]]:
        return [(self.elements[a].vertex, self.elements[b].vertex, d)
                for (a, b), d in sorted(self.multiplicity.items()) if d]


def build_gammaJ(t: CartanType, J: list[JElement]) -> GammaJ:
    if t.family not in ("A", "D"):
        raise UnsupportedType(E_TYPE_MESSAGE)
    mult = {}
    for a, x in enumerate(J):
        for b, y in enumerate(J):
            if a == b:
                continue
            d = denominator(t, x.i, y.i).pole_order(y.p - x.p)
            if d:
                mult[(a, b)] = d
    size = len(J)
    cartan = [[2 if a == b else -mult.get((a, b), 0) - mult.get((b, a), 0)
               for b in range(size)] for a in range(size)]
    return GammaJ(J, mult, cartan)


def klr_parameters(g: GammaJ, a: int, b: int) -> tuple[int, int] | None:
    """Exponents (d_ab, d_ba) of Q_ab(u,v) = (u-v)^{d_ab} (v-u)^{d_ba}; None encodes Q_aa = 0."""
    if a == b:
        return None
    return g.multiplicity.get((a, b), 0), g.multiplicity.get((b, a), 0)


def klr_polynomial(g: GammaJ, a: int, b: int) -> str:
    ex = klr_parameters(g, a, b)
    if ex is None:
        return "0"
    dab, dba = ex
    parts = []
    if dab:
        parts.append("(u-v)" + (f"^{dab}" if dab > 1 else ""))
    if dba:
        parts.append("(v-u)" + (f"^{dba}" if dba > 1 else ""))
    return "".join(parts) or "1"


def verify_thm42(Q: DynkinQuiver, xi: HeightFunction | None = None) -> bool:
    """Gamma^J is the reversed quiver under s -> phi^-1(alpha_s, 0), and A^J
    is the Cartan matrix of the finite type."""
    t = Q.type
    J = build_J(Q, xi)
    g = build_gammaJ(t, J)
    # J is ordered by root index s = 1..n
    arrows = Counter()
    for (a, b), d in g.multiplicity.items():
        arrows[(J[a].root_index, J[b].root_index)] += d
    expected = Counter({(b, a): 1 for a, b in Q.arrows})
    if arrows != expected:
        return False
    return [list(r) for r in t.cartan_matrix] == g.cartan


@dataclass
class JPoleReport:
    ok: bool
    max_order: int
    cases: Counter
    case4_ok: bool
    case12_ok: bool
    case3_absent: bool


def verify_lemma34(Q: DynkinQuiver, xi: HeightFunction | None = None) -> JPoleReport:
    """Pole orders between members of J are at most 1; also replays the case split
    on the double-pole region."""
    t = Q.type
    if t.family != "D":
        raise UnsupportedType("this check is stated for type D")
    n = t.rank
    xi = xi or height_function(Q)
    J = build_J(Q, xi)
    cases = Counter()
    max_order = 0
    case4_ok = case12_ok = case3_absent = True
    for x in J:
        for y in J:
            if x is y:
                continue
            (i, p), (j, r) = x.vertex, y.vertex
            order = denom_D(i, j, n).pole_order(r - p)
            max_order = max(max_order, order)
            if r <= p or not (2 <= i <= n - 2 and 2 <= j <= n - 2 and i + j >= n):
                continue
            low_i, low_j = xi[i] - 2 * m_i(Q, i), xi[j] - 2 * m_i(Q, j)
            if p == xi[i] and r == xi[j]:
                case = 1
            elif p == low_i and r == low_j:
                case = 2
            elif p == xi[i] and r == low_j:
                case = 3
            elif p == low_i and r == xi[j]:
                case = 4
            else:
                case = 0
            cases[case] += 1
            if case in (1, 2) and not r - p < 2 * n - i - j:
                case12_ok = False
            if case == 3 or case == 0:
                case3_absent = False
            if case == 4 and not r - p > i + j:
                case4_ok = False
    ok = max_order <= 1 and case4_ok and case12_ok and case3_absent
    return JPoleReport(ok, max_order, cases, case4_ok, case12_ok, case3_absent)


def check_double_pole_region(n: int) -> bool:
    """Multiplicity 2 in the type D denominators occurs exactly on the region,
    and no multiplicity exceeds 2."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = denom_D(i, j, n)
            mult = d.multiplicities()
            if any(v > 2 for v in mult.values()):
                return False
            for s in range(1, 2 * n):
                if (mult.get(s, 0) == 2) != double_pole_predicate(i, j, s, n):
                    return False
    return True


def check_J_boundary(Q: DynkinQuiver) -> bool:
    return boundary_check(Q)


def pair_exponent_table(t: CartanType) -> dict[tuple[int, int], tuple[int, ...]]:
    return {(k, l): denominator(t, k, l).exponents for k in t.vertices for l in t.vertices}


def all_specs(t: CartanType) -> Iterable[DenominatorSpec]:
    for k in t.vertices:
        for l in t.vertices:
            yield denominator(t, k, l)
