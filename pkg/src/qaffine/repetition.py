"""Repetition quiver, the bijection phi, the Auslander-Reiten quiver Gamma_Q
and the structural checks built on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .cartan import (
    CartanType,
    Root,
    apply_word,
    coxeter_number,
    is_positive,
    root_system,
    simple_root,
    star_involution,
)
from .quiver import (
    DynkinQuiver,
    HeightFunction,
    adapted_coxeter,
    adapted_w0,
    graph_distances,
    height_function,
)

RepVertex = tuple[int, int]


class ParityError(ValueError):
    """(i, p) with p - xi_i odd is not a vertex of the repetition quiver."""


def gamma_i(Q: DynkinQuiver, i: int) -> Root:
    """Sum of alpha_j over all j with a path j -> i (i included)."""
    seen = {i}
    stack = [i]
    while stack:
        u = stack.pop()
        for v in Q.predecessors[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return tuple(1 if j in seen else 0 for j in Q.type.vertices)


def tau(Q: DynkinQuiver, beta: Root) -> Root:
    return apply_word(Q.type, adapted_coxeter(Q), beta)


def tau_inverse(Q: DynkinQuiver, beta: Root) -> Root:
    return apply_word(Q.type, tuple(reversed(adapted_coxeter(Q))), beta)


def m_i(Q: DynkinQuiver, i: int) -> int:
    """max{k >= 0 : tau^k(gamma_i) is a positive root}."""
    beta = gamma_i(Q, i)
    k = 0
    while True:
        nxt = tau(Q, beta)
        if not is_positive(nxt):
            return k
        beta = nxt
        k += 1


def default_window(Q: DynkinQuiver, xi: HeightFunction) -> tuple[int, int]:
    h = coxeter_number(Q.type)
    return min(xi.xi.values()) - 2 * h, max(xi.xi.values()) + 2 * h


@dataclass(frozen=True)
class PhiTable:
    forward: dict
    backward: dict
    window: tuple[int, int]

    def __call__(self, i: int, p: int) -> tuple[Root, int]:
        return self.forward[(i, p)]

    def inverse(self, beta: Root, m: int = 0) -> RepVertex:
        return self.backward[(tuple(beta), m)]


def build_phi(Q: DynkinQuiver, xi: HeightFunction | None = None,
              window: tuple[int, int] | None = None) -> PhiTable:
    xi = xi or height_function(Q)
    if not xi.satisfies(Q):
        raise ValueError("height function does not match the quiver")
    lo, hi = window or default_window(Q, xi)
    cox = adapted_coxeter(Q)
    t = Q.type
    cox_inv = tuple(reversed(cox))
    fwd: dict[RepVertex, tuple[Root, int]] = {}
    for i in t.vertices:
        start = (gamma_i(Q, i), 0)
        if lo <= xi[i] <= hi:
            fwd[(i, xi[i])] = start
        beta, m = start
        p = xi[i]
        while p - 2 >= lo:
            b = apply_word(t, cox, beta)
            beta, m = (b, m) if is_positive(b) else (tuple(-c for c in b), m - 1)
            p -= 2
            if p <= hi:
                fwd[(i, p)] = (beta, m)
        beta, m = start
        p = xi[i]
        while p + 2 <= hi:
            b = apply_word(t, cox_inv, beta)
            beta, m = (b, m) if is_positive(b) else (tuple(-c for c in b), m + 1)
            p += 2
            if p >= lo:
                fwd[(i, p)] = (beta, m)
    back = {}
    for v, img in fwd.items():
        if img in back:
            raise AssertionError(f"phi not injective: {v} and {back[img]} both map to {img}")
        back[img] = v
    return PhiTable(fwd, back, (lo, hi))


def repetition_arrows(t: CartanType, vertices) -> list[tuple[RepVertex, RepVertex]]:
    """Arrows (i,p) -> (j,p+1) for adjacent i, j, restricted to the given vertex set."""
    vs = set(vertices)
    out = []
    for (i, p) in sorted(vs):
        for j in sorted(t.neighbors[i]):
            if (j, p + 1) in vs:
                out.append(((i, p), (j, p + 1)))
    return out


class ARQuiver:
    def __init__(self, Q: DynkinQuiver, xi: HeightFunction, phi: PhiTable):
        self.quiver = Q
        self.xi = xi
        self.phi = phi
        self.dimension_vectors: dict[RepVertex, Root] = {
            v: beta for v, (beta, m) in phi.forward.items() if m == 0
        }
        self.vertices = frozenset(self.dimension_vectors)
        self.arrows = repetition_arrows(Q.type, self.vertices)

    @cached_property
    def out_edges(self) -> dict[RepVertex, list[RepVertex]]:
        out: dict[RepVertex, list[RepVertex]] = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            out[a].append(b)
        return out

    @cached_property
    def in_edges(self) -> dict[RepVertex, list[RepVertex]]:
        out: dict[RepVertex, list[RepVertex]] = {v: [] for v in self.vertices}
        for a, b in self.arrows:
            out[b].append(a)
        return out

    def path_exists(self, v: RepVertex, w: RepVertex) -> bool:
        if v not in self.vertices or w not in self.vertices:
            raise KeyError("both endpoints must be vertices of Gamma_Q")
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            if u == w:
                return True
            for x in self.out_edges[u]:
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return False


def ar_quiver(Q: DynkinQuiver, xi: HeightFunction | None = None) -> ARQuiver:
    xi = xi or height_function(Q)
    return ARQuiver(Q, xi, build_phi(Q, xi))


# ---------------------------------------------------------------------------
# structural checks; each returns True or raises nothing and returns False

def check_phi_roundtrip(phi: PhiTable) -> bool:
    return all(phi.backward[img] == v for v, img in phi.forward.items())


def check_ar_description(Q: DynkinQuiver, xi: HeightFunction, ar: ARQuiver | None = None) -> bool:
    """Vertex set of Gamma_Q equals {(i,p): xi_i - 2 m_i <= p <= xi_i, p = xi_i mod 2}."""
    ar = ar or ARQuiver(Q, xi, build_phi(Q, xi))
    expected = {(i, p) for i in Q.type.vertices
                for p in range(xi[i] - 2 * m_i(Q, i), xi[i] + 1, 2)}
    return expected == set(ar.vertices) and len(expected) == len(root_system(Q.type))


def check_nakayama(Q: DynkinQuiver, xi: HeightFunction) -> bool:
    t = Q.type
    h = coxeter_number(t)
    for i in t.vertices:
        s = star_involution(t, i)
        if xi[s] - 2 * m_i(Q, s) != xi[i] - h + 2:
            return False
    return True


def check_injectives(ar: ARQuiver) -> bool:
    """The injective vertices (i, xi_i) carry gamma_i and span a copy of Q^rev."""
    Q, xi = ar.quiver, ar.xi
    inj = {(i, xi[i]): i for i in Q.type.vertices}
    if any(ar.dimension_vectors.get(v) != gamma_i(Q, i) for v, i in inj.items()):
        return False
    arrows = {(inj[a], inj[b]) for a, b in ar.arrows if a in inj and b in inj}
    return arrows == set(Q.reversed().arrows)


def check_additivity(ar: ARQuiver) -> bool:
    """dim X + dim tau X = sum of dim Z over arrows Z -> X, whenever tau X is in Gamma_Q.

    The vertex translation (i,p) -> (i,p-2) is also checked against the
    Coxeter element acting on dimension vectors.
    """
    Q = ar.quiver
    for (i, p), dim in ar.dimension_vectors.items():
        below = (i, p - 2)
        if below not in ar.vertices:
            if is_positive(tau(Q, dim)):
                return False
            continue
        dtau = ar.dimension_vectors[below]
        if tau(Q, dim) != dtau:
            return False
        total = [0] * Q.type.rank
        for z in ar.in_edges[(i, p)]:
            for k, c in enumerate(ar.dimension_vectors[z]):
                total[k] += c
        if tuple(a + b for a, b in zip(dim, dtau)) != tuple(total):
            return False
    return True


def check_range(Q: DynkinQuiver, xi: HeightFunction, ar: ARQuiver) -> bool:
    """(i, xi_j - d(i,j)) and (i, xi_j - 2 m_j + d(i,j)) lie in Gamma_Q for all i, j."""
    t = Q.type
    ms = {j: m_i(Q, j) for j in t.vertices}
    for i in t.vertices:
        dist = graph_distances(t, i)
        for j in t.vertices:
            d = dist[j]
            if (i, xi[j] - d) not in ar.vertices:
                return False
            if (i, xi[j] - 2 * ms[j] + d) not in ar.vertices:
                return False
    return True


def check_summing_pairs(Q: DynkinQuiver, ar: ARQuiver) -> bool:
    """For the adapted word: k < l with beta_k + beta_l a root forces a path
    phi^-1(beta_l,0) -> phi^-1(beta_k,0) and p_k > p_l."""
    bs = adapted_w0(Q)
    rs = root_system(Q.type)
    inv = {beta: v for v, beta in ar.dimension_vectors.items()}
    r = len(bs.betas)
    for k in range(r):
        for l in range(k + 1, r):
            s = tuple(a + b for a, b in zip(bs.betas[k], bs.betas[l]))
            if not rs.is_positive_root(s):
                continue
            vk, vl = inv[bs.betas[k]], inv[bs.betas[l]]
            if vk[0] != bs.word[k] or vl[0] != bs.word[l]:
                return False
            if not ar.path_exists(vl, vk) or not vk[1] > vl[1]:
                return False
    return True


def boundary_set(Q: DynkinQuiver, xi: HeightFunction) -> set[RepVertex]:
    t = Q.type
    out = set()
    for i in t.vertices:
        m = m_i(Q, i)
        out.add((i, xi[i]))
        out.add((i, xi[i] - 2 * m))
        if len(t.neighbors[i]) <= 1:
            out.update((i, xi[i] - 2 * s) for s in range(m + 1))
    return out


def boundary_check(Q: DynkinQuiver, xi: HeightFunction | None = None,
                   phi: PhiTable | None = None) -> bool:
    xi = xi or height_function(Q)
    phi = phi or build_phi(Q, xi)
    t = Q.type
    bd = boundary_set(Q, xi)
    for k in t.vertices:
        i, p = phi.inverse(simple_root(t, k), 0)
        if (i, p) not in bd:
            return False
        if len(t.neighbors[i]) > 1 and p not in (xi[i], xi[i] - 2 * m_i(Q, i)):
            return False
    return True


# ---------------------------------------------------------------------------
# monomials and spectral parameters

def monomial_evaluation(xi: HeightFunction, i: int, p: int, h: int) -> int:
    """Exponent s with L(Y_{i,p}) the fundamental module of i at spectral parameter (-q)^s."""
    if (p - xi[i]) % 2:
        raise ParityError(f"({i},{p}) has the wrong parity for xi_{i} = {xi[i]}")
    return p + h


def parity_sign(xi: HeightFunction, i: int) -> int:
    """o(i) = -(-1)^{xi_i}."""
    return -1 if xi[i] % 2 == 0 else 1


@dataclass(frozen=True)
class DrinfeldDatum:
    """Drinfeld polynomial 1 + coefficient * u of a fundamental module,
    with coefficient = sign * q^q_exponent."""

    vertex: int
    sign: int
    q_exponent: int

    def root(self) -> tuple[int, int]:
        """The zero u = -1/coefficient as (sign, q exponent)."""
        return -self.sign, -self.q_exponent


def drinfeld_datum(xi: HeightFunction, i: int, h: int) -> DrinfeldDatum:
    o = parity_sign(xi, i)
    sign = o * (-1 if h % 2 else 1)
    return DrinfeldDatum(i, sign, -h)
