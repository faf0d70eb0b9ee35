"""Vector and spin representations in type D, minuscule representations in type A."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .base import ModuleData, module_from_actions


def d_pairings(eps: tuple, n: int) -> tuple[int, ...]:
    """<h_i, wt> for i = 0..n, wt given in epsilon coordinates (level zero)."""
    h = [-(eps[0] + eps[1])]
    h += [eps[i - 1] - eps[i] for i in range(1, n)]
    h.append(eps[n - 2] + eps[n - 1])
    out = []
    for x in h:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"non-integral pairing {x}")
        out.append(int(x))
    return tuple(out)


def vector_labels(n: int) -> list[str]:
    """Basis order 1, ..., n, n-bar, ..., 1-bar (bars written with a minus sign)."""
    return [str(j) for j in range(1, n + 1)] + [f"-{j}" for j in range(n, 0, -1)]


def vector_weight(label: str, n: int) -> tuple[int, ...]:
    j = int(label)
    eps = [0] * n
    eps[abs(j) - 1] = 1 if j > 0 else -1
    return tuple(eps)


def vector_rep(n: int, *, serre: bool | None = None) -> ModuleData:
    if n < 4:
        raise ValueError("type D vector representation needs n >= 4")
    labels = vector_labels(n)
    idx = {lab: k for k, lab in enumerate(labels)}
    v = lambda j: idx[str(j)]
    moves: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n + 1)}
    for i in range(1, n):
        moves[i].append((v(i + 1), v(i)))          # e_i v_{i+1} = v_i
        moves[i].append((v(-i), v(-(i + 1))))      # e_i v_{i-bar} = v_{(i+1)-bar}
    moves[n].append((v(-(n - 1)), v(n)))           # e_n v_{(n-1)-bar} = v_n
    moves[n].append((v(-n), v(n - 1)))             # e_n v_{n-bar} = v_{n-1}
    moves[0].append((v(2), v(-1)))                 # e_0 v_2 = v_{1-bar}
    moves[0].append((v(1), v(-2)))                 # e_0 v_1 = v_{2-bar}
    pair = [d_pairings(vector_weight(lab, n), n) for lab in labels]
    M = module_from_actions("D", n, labels, pair, moves, v(1), f"V{n}")
    return M.verify(serre=(n == 4) if serre is None else serre)


def spin_labels(n: int, sign: int) -> list[tuple[int, ...]]:
    out = []
    for m in itertools.product((1, -1), repeat=n):
        prod = 1
        for x in m:
            prod *= x
        if prod == sign:
            out.append(m)
    return out


def spin_rep(n: int, sign: int, *, serre: bool = False) -> ModuleData:
    """sign = +1 gives the module of highest weight varpi_n, -1 that of varpi_{n-1}."""
    if n < 4:
        raise ValueError("type D spin representation needs n >= 4")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    labels = spin_labels(n, sign)
    idx = {m: k for k, m in enumerate(labels)}
    moves: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n + 1)}
    for m in labels:
        for i in range(1, n):
            if m[i - 1] == -1 and m[i] == 1:
                t = list(m)
                t[i - 1], t[i] = 1, -1
                moves[i].append((idx[m], idx[tuple(t)]))
        if m[n - 2] == -1 and m[n - 1] == -1:
            t = list(m)
            t[n - 2] = t[n - 1] = 1
            moves[n].append((idx[m], idx[tuple(t)]))
        if m[0] == 1 and m[1] == 1:
            t = list(m)
            t[0] = t[1] = -1
            moves[0].append((idx[m], idx[tuple(t)]))
    pair = [d_pairings(tuple(Fraction(x, 2) for x in m), n) for m in labels]
    top = tuple([1] * (n - 1) + [sign])
    M = module_from_actions("D", n, labels, pair, moves, idx[top], f"S{'+' if sign > 0 else '-'}{n}")
    return M.verify(serre=serre)


def type_a_minuscule(n: int, k: int) -> ModuleData:
    """k-th fundamental module of type A_n^(1) on k-subsets of {1..n+1}."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    labels = [frozenset(s) for s in itertools.combinations(range(1, n + 2), k)]
    idx = {s: i for i, s in enumerate(labels)}
    moves: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n + 1)}
    for s in labels:
        for i in range(1, n + 1):
            if i + 1 in s and i not in s:
                moves[i].append((idx[s], idx[(s - {i + 1}) | {i}]))
        if 1 in s and n + 1 not in s:
            moves[0].append((idx[s], idx[(s - {1}) | {n + 1}]))

    def pairing(s):
        eps = [1 if j in s else 0 for j in range(1, n + 2)]
        return tuple([eps[n] - eps[0]] + [eps[i - 1] - eps[i] for i in range(1, n + 1)])

    pair = [pairing(s) for s in labels]
    M = module_from_actions("A", n, [tuple(sorted(s)) for s in labels], pair, moves,
                            idx[frozenset(range(1, k + 1))], f"A{n}w{k}")
    return M.verify(serre=True)
