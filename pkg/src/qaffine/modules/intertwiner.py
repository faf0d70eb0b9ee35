"""Intertwiners M (x) N_z -> N_z (x) M, their verification and denominators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..denominators import DenominatorSpec
from ..exact import EchelonSpan, Frac, InconsistentPayload, SparseMatrix, lcm_denominators
from ..exact.polyz import PolyZ
from .base import ModuleData, evaluate, one, tensor


class IntertwinerError(ArithmeticError):
    """No unique normalized intertwiner could be determined."""


class DenominatorError(ArithmeticError):
    """The denominator does not split into factors z - (-q)^s."""


@dataclass
class IntertwinerMatrix:
    matrix: SparseMatrix
    source: ModuleData
    target: ModuleData
    normalization: str = "extremal vectors fixed"

    def entry(self, row_label, col_label):
        return self.matrix.get(self.target.index(row_label), self.source.index(col_label))

    def apply_to(self, label) -> dict:
        """Image of a source basis vector as {target label: coefficient}."""
        c = self.source.index(label)
        out = {}
        for i, row in self.matrix.rows.items():
            v = row.get(c)
            if v:
                out[self.target.labels[i]] = v
        return out


def commutes(R: SparseMatrix, source: ModuleData, target: ModuleData) -> bool:
    """R Delta(x) = Delta(x) R for every Chevalley generator x."""
    for (_, a), (_, b) in zip(source.generators(), target.generators()):
        if R @ a != b @ R:
            return False
    return True


def solve_intertwiner(M: ModuleData, N: ModuleData, z: Frac | None = None, *,
                      check: bool = True) -> IntertwinerMatrix:
    """The intertwiner M (x) N_z -> N_z (x) M sending u_M (x) u_N to u_N (x) u_M.

    The extremal tensor is pushed through all generators; on each weight
    block the map is read off from the propagated pairs (x w, x R w).  The
    block of the seed weight must be one-dimensional and the orbit must span
    every block, otherwise the intertwiner is not determined.
    """
    z = z if z is not None else Frac.gen(M.ctx, "z")
    Nz = evaluate(N, z)
    src = tensor(M, Nz)
    tgt = tensor(Nz, M)
    ctx = M.ctx
    blocks = src.weight_blocks()
    if len(blocks[src.weights[src.highest]]) != 1:
        raise IntertwinerError("seed weight space is not one-dimensional")
    block_of = {b: w for w, idxs in blocks.items() for b in idxs}
    spans = {w: EchelonSpan(ctx) for w in blocks}
    gens = list(zip((m for _, m in src.generators()), (m for _, m in tgt.generators())))
    seed_src = {src.highest: one(ctx)}
    seed_tgt = {tgt.highest: one(ctx)}
    queue = deque()
    spans[src.weights[src.highest]].add(seed_src, seed_tgt)
    queue.append((seed_src, seed_tgt))
    while queue:
        w, rw = queue.popleft()
        for a, b in gens:
            xw = a.apply(w)
            if not xw:
                if b.apply(rw):
                    raise IntertwinerError("generator kills a vector but not its image")
                continue
            wt = block_of[next(iter(xw))]
            span = spans[wt]
            if len(span) == len(blocks[wt]):
                continue
            xrw = b.apply(rw)
            try:
                if span.add(xw, xrw):
                    queue.append((xw, xrw))
            except InconsistentPayload as exc:
                raise IntertwinerError("no intertwiner with the prescribed normalization") from exc
    rows: dict[int, dict[int, Frac]] = {}
    for wt, idxs in blocks.items():
        span = spans[wt]
        if len(span) != len(idxs):
            raise IntertwinerError(f"extremal tensor does not generate the weight block {wt}")
        for c in idxs:
            for r, v in span.payload[c].items():
                rows.setdefault(r, {})[c] = v
    R = SparseMatrix.from_rows(tgt.dim, src.dim, rows)
    if check and not commutes(R, src, tgt):
        raise IntertwinerError("solution fails the commutation check")
    return IntertwinerMatrix(R, src, tgt)


def candidate_exponents(n: int) -> range:
    return range(-4 * n, 4 * n + 1)


def extract_denominator(R: IntertwinerMatrix | SparseMatrix, *, family: str = "D", n: int | None = None,
                        k: int = 0, l: int = 0) -> DenominatorSpec:
    mat = R.matrix if isinstance(R, IntertwinerMatrix) else R
    if n is None:
        if not isinstance(R, IntertwinerMatrix):
            raise ValueError("rank needed for a bare matrix")
        n = R.source.n
        family = R.source.family
    d = lcm_denominators(mat)
    found, rest = d.factor_neg_q_powers(candidate_exponents(n))
    if rest.degree() > 0:
        raise DenominatorError(f"unfactored remainder {rest}")
    exps = tuple(sorted(found.elements()))
    return DenominatorSpec(family, n, k, l, exps)


def denominator_polynomial(R: IntertwinerMatrix) -> PolyZ:
    return lcm_denominators(R.matrix)
