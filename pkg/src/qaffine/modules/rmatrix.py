"""The explicit normalized R-matrix on the vector representation and checks on it."""

from __future__ import annotations

from fractions import Fraction

from ..exact import QZ, Frac, SparseMatrix, context
from .base import ModuleData, evaluate, one, tensor
from .intertwiner import IntertwinerMatrix
from .reps import vector_labels, vector_rep


def chain_position(label: str, n: int) -> int:
    """|j|: j for j = 1..n and 2n - j for j-bar, so n and n-bar share position n."""
    j = int(label)
    return j if j > 0 else 2 * n + j


def precedes(a: str, b: str, n: int) -> bool:
    """a strictly before b in the partial order of the basis (n, n-bar incomparable)."""
    return chain_position(a, n) < chain_position(b, n)


def _bar(label: str) -> str:
    return str(-int(label))


def _signed_q_power(e: int, ctx=QZ) -> Frac:
    return Frac.monomial(ctx, {"q": e}, -1 if e % 2 else 1)


def c_coefficient(i: str, j: str, n: int, ctx=QZ) -> Frac:
    """c_{ij}(z) entering the image of v_j (x) v_{j-bar}."""
    q = Frac.gen(ctx, "q")
    z = Frac.gen(ctx, "z")
    top = q ** (2 * n - 2)
    if i == j:
        return (q * q * z - top) * (z - 1)
    delta = (z - top) if i == _bar(j) else Frac.const(ctx, 0)
    step = _signed_q_power(chain_position(j, n) - chain_position(i, n), ctx)
    if precedes(i, j, n) or (chain_position(i, n) == chain_position(j, n)):
        return (1 - q * q) * z * (step * (1 - z) + delta)
    return (1 - q * q) * (top * step * (1 - z) + delta)


def rnorm_11(n: int, ctx=QZ) -> IntertwinerMatrix:
    """R(z): V (x) V_z -> V_z (x) V in closed form, entries in Q(q, z)."""
    V = vector_rep(n, serre=False)
    labels = vector_labels(n)
    idx = {lab: k for k, lab in enumerate(labels)}
    dim = len(labels)
    q = Frac.gen(ctx, "q")
    z = Frac.gen(ctx, "z")
    u = one(ctx)
    den1 = z - q * q
    den2 = den1 * (z - q ** (2 * n - 2))
    entries = {}
    for k in labels:
        for l in labels:
            col = idx[k] * dim + idx[l]
            if k == l:
                entries[(col, col)] = u
            elif k != _bar(l):
                power = z if precedes(l, k, n) else u
                entries[(col, col)] = (1 - q * q) * power / den1
                entries[(idx[l] * dim + idx[k], col)] = q * (z - 1) / den1
            else:
                for j in labels:
                    c = c_coefficient(j, k, n, ctx)
                    if c:
                        entries[(idx[_bar(j)] * dim + idx[j], col)] = c / den2
    R = SparseMatrix(dim * dim, dim * dim, entries)
    Vz = evaluate(V, z)
    return IntertwinerMatrix(R, tensor(V, Vz), tensor(Vz, V), "closed form")


def specialize(R: SparseMatrix, target, images) -> SparseMatrix:
    return R.map(lambda v: v.substitute(target, images))


def embed(R: SparseMatrix, left: int, right: int, one_value) -> SparseMatrix:
    """I_left (x) R (x) I_right."""
    out = R
    if left:
        out = SparseMatrix.identity(left, one_value).kron(out)
    if right:
        out = out.kron(SparseMatrix.identity(right, one_value))
    return out


def yang_baxter_check(n: int = 4, q_value=Fraction(3, 5)) -> bool:
    """R12(y) R23(xy) R12(x) = R23(x) R12(xy) R23(y) on V (x) V (x) V with q specialized."""
    XY = context("x", "y")
    x = Frac.gen(XY, "x")
    y = Frac.gen(XY, "y")
    R = rnorm_11(n).matrix
    dim = 2 * n
    u = Frac.const(XY, 1)

    def at(val):
        return specialize(R, XY, {"q": q_value, "z": val})

    Rx, Ry, Rxy = at(x), at(y), at(x * y)
    lhs = embed(Ry, 0, dim, u) @ embed(Rxy, dim, 0, u) @ embed(Rx, 0, dim, u)
    rhs = embed(Rx, dim, 0, u) @ embed(Rxy, 0, dim, u) @ embed(Ry, dim, 0, u)
    return lhs == rhs


def vector_module(n: int) -> ModuleData:
    return vector_rep(n, serre=False)
