"""Fusion: the composite of specialized R-matrices on V^{(k)} and its kernel and image."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import QZ, EchelonSpan, Frac, SparseMatrix, column_space_basis, neg_q_power, solve_nullspace
from .base import ModuleData, evaluate, one, tensor_many
from .reps import vector_labels, vector_rep, vector_weight
from .rmatrix import embed, rnorm_11


def spectral_parameters(k: int) -> list[int]:
    """Exponents s of (-q)^s along V^{(k)} = V_{(-q)^{1-k}} (x) ... (x) V_{(-q)^{k-1}}."""
    return list(range(1 - k, k, 2))


def kernel_term_parameters(k: int, j: int) -> list[int]:
    """Spectral exponents of the j-th summand in the kernel description, slot by slot.

    The summand is V^{(j)} shifted by j - k, then W (built on V^{(2)}) shifted
    by 2j + 2 - k, then V^{(k-2-j)} shifted by j + 2.
    """
    return ([s + j - k for s in spectral_parameters(j)]
            + [s + 2 * j + 2 - k for s in spectral_parameters(2)]
            + [s + j + 2 for s in spectral_parameters(k - 2 - j)])


def _polynomial_r(n: int, ctx=QZ) -> SparseMatrix:
    """d_{1,1}(z) R(z), which has polynomial entries."""
    R = rnorm_11(n, ctx).matrix
    z = Frac.gen(ctx, "z")
    q = Frac.gen(ctx, "q")
    d = (z - q * q) * (z - q ** (2 * n - 2))
    return R.scale(d)


def _at_z(M: SparseMatrix, value: Frac, ctx=QZ) -> SparseMatrix:
    q = Frac.gen(ctx, "q")
    return M.map(lambda v: v.substitute(ctx, {"q": q, "z": value}))


def fusion_factors(k: int, n: int, ctx=QZ) -> list[tuple[int, int]]:
    """(slot i, exponent e) for each R_i(q^e), listed in the order they are applied."""
    out = []
    for m in range(1, k):
        for i in range(m, 0, -1):
            out.append((i, 2 * i))
    return out


def fusion_matrix(k: int, n: int, ctx=QZ) -> SparseMatrix:
    dim = 2 * n
    P = _polynomial_r(n, ctx)
    q = Frac.gen(ctx, "q")
    cache: dict[int, SparseMatrix] = {}
    T = SparseMatrix.identity(dim ** k, one(ctx))
    for i, e in fusion_factors(k, n, ctx):
        if e not in cache:
            cache[e] = _at_z(P, q ** e, ctx)
        T = embed(cache[e], dim ** (i - 1), dim ** (k - i - 1), one(ctx)) @ T
    return T


def fusion_modules(k: int, n: int, ctx=QZ) -> tuple[ModuleData, ModuleData]:
    """V^{(k)} and its reversal, the source and target of the fusion map."""
    V = vector_rep(n, serre=False)
    params = spectral_parameters(k)
    src = tensor_many([evaluate(V, neg_q_power(s, ctx)) for s in params])
    tgt = tensor_many([evaluate(V, neg_q_power(s, ctx)) for s in reversed(params)])
    return src, tgt


def w_space(n: int, ctx=QZ) -> list[dict[int, Frac]]:
    """A basis of W, the image of R(q^-2) inside V^{(2)}."""
    R = rnorm_11(n, ctx).matrix
    q = Frac.gen(ctx, "q")
    return column_space_basis(_at_z(R, q ** -2, ctx), ctx)


def kernel_rhs(k: int, n: int, ctx=QZ) -> list[dict[int, Frac]]:
    """Spanning vectors of sum_j V^{(x)j} (x) W (x) V^{(x)(k-2-j)}."""
    dim = 2 * n
    u = one(ctx)
    W = w_space(n, ctx)
    gens = []
    for j in range(k - 1):
        right = dim ** (k - 2 - j)
        for a in range(dim ** j):
            for w in W:
                for b in range(right):
                    gens.append({(a * dim * dim + c) * right + b: v * u for c, v in w.items()})
    return gens


def _weight_of(idx: int, k: int, n: int) -> tuple[int, ...]:
    labels = vector_labels(n)
    dim = 2 * n
    total = [0] * n
    for _ in range(k):
        idx, r = divmod(idx, dim)
        for t, x in enumerate(vector_weight(labels[r], n)):
            total[t] += x
    return tuple(total)


@dataclass
class FusionReport:
    k: int
    n: int
    dimension: int
    rank: int
    kernel_dim: int
    rhs_dim: int
    rhs_in_kernel: bool
    kernel_in_rhs: bool
    spectral_match: bool
    top_weight: tuple[int, ...]
    top_weight_dim: int
    generated_dim: int
    is_homomorphism: bool | None = None
    blocks: dict = field(default_factory=dict)

    @property
    def kernel_ok(self) -> bool:
        return (self.rhs_in_kernel and self.kernel_in_rhs and self.kernel_dim == self.rhs_dim
                and self.spectral_match)

    @property
    def image_ok(self) -> bool:
        return self.top_weight_dim == 1 and self.generated_dim == self.rank

    @property
    def ok(self) -> bool:
        return self.kernel_ok and self.image_ok and self.is_homomorphism is not False

    def to_dict(self) -> dict:
        return {
            "k": self.k, "n": self.n, "dimension": self.dimension, "rank": self.rank,
            "kernel_dim": self.kernel_dim, "rhs_dim": self.rhs_dim,
            "rhs_in_kernel": self.rhs_in_kernel, "kernel_in_rhs": self.kernel_in_rhs,
            "spectral_match": self.spectral_match, "top_weight": list(self.top_weight),
            "top_weight_dim": self.top_weight_dim, "generated_dim": self.generated_dim,
            "is_homomorphism": self.is_homomorphism, "kernel_ok": self.kernel_ok,
            "image_ok": self.image_ok,
        }


def _generated_dim(seed: dict[int, Frac], module: ModuleData, ctx) -> int:
    """Dimension of the submodule generated by a single vector."""
    gens = [m for _, m in module.generators()]
    span = EchelonSpan(ctx)
    span.add(seed)
    stack = [seed]
    while stack:
        v = stack.pop()
        for g in gens:
            w = g.apply(v)
            if w and span.add(w):
                stack.append(w)
    return len(span)


def fusion_report(k: int, n: int, *, check_hom: bool = True, ctx=QZ) -> FusionReport:
    if k < 2:
        raise ValueError("fusion needs k >= 2")
    dim = 2 * n
    T = fusion_matrix(k, n, ctx)
    total = dim ** k
    blocks: dict[tuple, list[int]] = {}
    for idx in range(total):
        blocks.setdefault(_weight_of(idx, k, n), []).append(idx)
    cols = T.columns()
    kernel: list[dict[int, Frac]] = []
    rank = 0
    block_info = {}
    for wt, idxs in blocks.items():
        sub = T.submatrix(sorted({r for c in idxs for r in cols.get(c, {})}), idxs)
        null = solve_nullspace(sub, ctx)
        for vec in null:
            kernel.append({idxs[c]: v for c, v in vec.items()})
        rank += len(idxs) - len(null)
        block_info[wt] = (len(idxs), len(null))
    rhs = kernel_rhs(k, n, ctx)
    rhs_in_kernel = all(not T.apply(v) for v in rhs)
    span = EchelonSpan(ctx)
    for v in rhs:
        span.add(v)
    kernel_in_rhs = all(span.contains(v) for v in kernel)
    params = spectral_parameters(k)
    spectral_match = all(kernel_term_parameters(k, j) == params for j in range(k - 1))

    top = tuple([1] * k + [0] * (n - k))
    top_idxs = blocks.get(top, [])
    img_span = EchelonSpan(ctx)
    for c in top_idxs:
        col = cols.get(c)
        if col:
            img_span.add(dict(col))
    top_dim = len(img_span)
    src, tgt = fusion_modules(k, n, ctx)
    generated = 0
    if top_dim == 1:
        seed = next(iter(img_span.rows.values()))
        generated = _generated_dim(seed, tgt, ctx)
    hom = None
    if check_hom:
        hom = all((b @ T) == (T @ a) for (_, a), (_, b) in zip(src.generators(), tgt.generators()))
    return FusionReport(k, n, total, rank, len(kernel), len(span), rhs_in_kernel, kernel_in_rhs,
                        spectral_match, top, top_dim, generated, hom,
                        {str(w): v for w, v in block_info.items()})


def fusion_image_weight(k: int, n: int) -> tuple[Fraction, ...]:
    """epsilon_1 + ... + epsilon_k, the extremal weight carried by the image."""
    return tuple(Fraction(1 if i < k else 0) for i in range(n))


def image_labels(k: int, n: int):
    return list(itertools.product(vector_labels(n), repeat=k))
