"""Finite-dimensional modules over the quantum affine algebra given by
explicit sparse generator matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..exact import QZ, Frac, SparseMatrix


class RelationError(AssertionError):
    """A defining relation of the quantum group fails on a module."""


@lru_cache(maxsize=None)
def affine_cartan(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Generalized Cartan matrix of the untwisted affine type, indices 0..n."""
    size = n + 1
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2
    edges: list[tuple[int, int]] = []
    if family == "A":
        if n == 1:
            a[0][1] = a[1][0] = -2
            return tuple(map(tuple, a))
        edges = [(i, i + 1) for i in range(n)] + [(n, 0)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n), (0, 2)]
    else:
        raise ValueError(f"no module data for family {family}")
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return tuple(map(tuple, a))


def one(ctx=QZ) -> Frac:
    return Frac.const(ctx, 1)


def q_power(k: int, ctx=QZ) -> Frac:
    return Frac.monomial(ctx, {"q": k})


def q_integer(k: int, ctx=QZ) -> Frac:
    """[k]_q = (q^k - q^-k)/(q - q^-1)."""
    if k == 0:
        return Frac.const(ctx, 0)
    sign = 1 if k > 0 else -1
    total = Frac.const(ctx, 0)
    for e in range(-abs(k) + 1, abs(k), 2):
        total = total + q_power(e, ctx)
    return total * sign


@dataclass
class ModuleData:
    """Generators e_i, f_i (i = 0..n) as sparse matrices; K_i acts diagonally
    by q^{<h_i, wt>} where ``weights[b][i]`` stores the pairing <h_i, wt(b)>."""

    family: str
    n: int
    labels: list
    weights: list[tuple[int, ...]]
    e: list[SparseMatrix]
    f: list[SparseMatrix]
    highest: int = 0
    name: str = ""
    ctx: object = QZ

    @property
    def dim(self) -> int:
        return len(self.labels)

    def K(self, i: int, power: int = 1) -> SparseMatrix:
        return SparseMatrix.diagonal(q_power(power * w[i], self.ctx) for w in self.weights)

    def identity(self) -> SparseMatrix:
        return SparseMatrix.identity(self.dim, one(self.ctx))

    def index(self, label) -> int:
        return self.labels.index(label)

    def weight_blocks(self) -> dict[tuple[int, ...], list[int]]:
        blocks: dict[tuple[int, ...], list[int]] = {}
        for b, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(b)
        return blocks

    def generators(self):
        """Yield (name, matrix) over all Chevalley generators."""
        for i in range(self.n + 1):
            yield f"e{i}", self.e[i]
            yield f"f{i}", self.f[i]

    # relation checks ---------------------------------------------------------

    def check_weights(self):
        a = affine_cartan(self.family, self.n)
        for j in range(self.n + 1):
            col = tuple(a[i][j] for i in range(self.n + 1))
            for mats, sign in ((self.e, 1), (self.f, -1)):
                for (r, c), _ in mats[j].items():
                    diff = tuple(x - y for x, y in zip(self.weights[r], self.weights[c]))
                    if diff != tuple(sign * x for x in col):
                        kind = "e" if sign > 0 else "f"
                        raise RelationError(f"{kind}{j} moves {self.labels[c]} to {self.labels[r]} "
                                            f"with weight change {diff}")

    def check_commutators(self):
        for i in range(self.n + 1):
            for j in range(self.n + 1):
                comm = self.e[i] @ self.f[j] - self.f[j] @ self.e[i]
                if i == j:
                    target = SparseMatrix.diagonal(q_integer(w[i], self.ctx) for w in self.weights)
                else:
                    target = SparseMatrix(self.dim, self.dim)
                if comm != target:
                    raise RelationError(f"[e{i}, f{j}] relation fails on {self.name}")

    def check_serre(self):
        a = affine_cartan(self.family, self.n)
        for mats, kind in ((self.e, "e"), (self.f, "f")):
            for i in range(self.n + 1):
                for j in range(self.n + 1):
                    if i == j:
                        continue
                    m = 1 - a[i][j]
                    total = SparseMatrix(self.dim, self.dim)
                    for k in range(m + 1):
                        term = _mat_power(mats[i], m - k, self) @ mats[j] @ _mat_power(mats[i], k, self)
                        coeff = q_binomial(m, k, self.ctx) * (-1 if k % 2 else 1)
                        total = total + term.scale(coeff)
                    if not total.is_zero():
                        raise RelationError(f"Serre relation ({kind}{i}, {kind}{j}) fails on {self.name}")

    def verify(self, serre: bool = False) -> "ModuleData":
        self.check_weights()
        self.check_commutators()
        if serre:
            self.check_serre()
        return self


def _mat_power(m: SparseMatrix, k: int, mod: ModuleData) -> SparseMatrix:
    out = mod.identity()
    for _ in range(k):
        out = out @ m
    return out


def q_binomial(m: int, k: int, ctx=QZ) -> Frac:
    num = one(ctx)
    den = one(ctx)
    for t in range(k):
        num = num * q_integer(m - t, ctx)
        den = den * q_integer(t + 1, ctx)
    return num / den


def module_from_actions(family: str, n: int, labels: Sequence, pairings: Sequence[tuple[int, ...]],
                        e_moves: dict[int, list[tuple[int, int]]], highest: int, name: str,
                        ctx=QZ) -> ModuleData:
    """Build a module whose e_i send basis vector b to basis vector a (coefficient 1)
    for each move (b, a); f_i is the transpose."""
    dim = len(labels)
    u = one(ctx)
    e, f = [], []
    for i in range(n + 1):
        moves = e_moves.get(i, [])
        e.append(SparseMatrix(dim, dim, {(a, b): u for b, a in moves}))
        f.append(SparseMatrix(dim, dim, {(b, a): u for b, a in moves}))
    return ModuleData(family, n, list(labels), [tuple(p) for p in pairings], e, f, highest, name, ctx)


@dataclass
class EvaluationModule(ModuleData):
    base: ModuleData | None = None
    twist: Frac | None = None


def evaluate(M: ModuleData, twist) -> EvaluationModule:
    """Spectral twist: e_0 scaled by the twist, f_0 by its inverse."""
    if not isinstance(twist, Frac):
        twist = Frac.const(M.ctx, twist)
    e = list(M.e)
    f = list(M.f)
    e[0] = e[0].scale(twist)
    f[0] = f[0].scale(twist.inverse())
    base = M.base if isinstance(M, EvaluationModule) and M.base is not None else M
    total = twist * M.twist if isinstance(M, EvaluationModule) and M.twist is not None else twist
    return EvaluationModule(M.family, M.n, M.labels, M.weights, e, f, M.highest,
                            f"{base.name}_({total})", M.ctx, base=base, twist=total)


def tensor(M: ModuleData, N: ModuleData) -> ModuleData:
    """M (x) N with Delta(e) = e (x) K^-1 + 1 (x) e and Delta(f) = f (x) 1 + K (x) f."""
    if (M.family, M.n) != (N.family, N.n):
        raise ValueError("tensor factors of different types")
    IM, IN = M.identity(), N.identity()
    e, f = [], []
    for i in range(M.n + 1):
        e.append(M.e[i].kron(N.K(i, -1)) + IM.kron(N.e[i]))
        f.append(M.f[i].kron(IN) + M.K(i).kron(N.f[i]))
    labels = [(a, b) for a in M.labels for b in N.labels]
    weights = [tuple(x + y for x, y in zip(wa, wb)) for wa in M.weights for wb in N.weights]
    return ModuleData(M.family, M.n, labels, weights, e, f, M.highest * N.dim + N.highest,
                      f"{M.name}*{N.name}", M.ctx)


def tensor_many(mods: Sequence[ModuleData]) -> ModuleData:
    out = mods[0]
    for m in mods[1:]:
        out = tensor(out, m)
    return out


def swap_matrix(dm: int, dn: int, ctx=QZ) -> SparseMatrix:
    """Flip M (x) N -> N (x) M on basis tensors."""
    u = one(ctx)
    return SparseMatrix(dm * dn, dm * dn, {(b * dm + a, a * dn + b): u
                                          for a in range(dm) for b in range(dn)})
