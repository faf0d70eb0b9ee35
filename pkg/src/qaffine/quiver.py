"""Dynkin quivers, height functions, adapted words, convexity, Kostant partitions."""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .cartan import (
    CartanType,
    Root,
    apply_word,
    height,
    is_positive,
    root_system,
    simple_root,
)


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class DynkinQuiver:
    type: CartanType
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = {frozenset(a) for a in self.arrows}
        expected = {frozenset(e) for e in self.type.edges}
        if undirected != expected or len(self.arrows) != len(expected):
            raise QuiverError(f"arrows {sorted(self.arrows)} do not orient the {self.type} diagram")

    @classmethod
    def from_arrows(cls, t: CartanType, arrows: Iterable[Sequence[int]]) -> "DynkinQuiver":
        return cls(t, frozenset((int(a), int(b)) for a, b in arrows))

    @classmethod
    def linear(cls, t: CartanType) -> "DynkinQuiver":
        """Every edge oriented from smaller to larger label."""
        return cls(t, frozenset(t.edges))

    @classmethod
    def parse(cls, t: CartanType, spec: str) -> "DynkinQuiver":
        """Arrows written as '1-2,3-2' meaning 1->2 and 3->2."""
        arrows = []
        for tok in spec.split(","):
            tok = tok.strip()
            if tok:
                a, b = tok.split("-")
                arrows.append((int(a), int(b)))
        return cls.from_arrows(t, arrows)

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def to_json(self) -> str:
        return json.dumps({"type": self.type.family, "rank": self.type.rank,
                           "arrows": [list(a) for a in self.sorted_arrows()]})

    @classmethod
    def from_json(cls, text: str | dict) -> "DynkinQuiver":
        d = json.loads(text) if isinstance(text, str) else text
        return cls.from_arrows(CartanType(d["type"], int(d["rank"])), d["arrows"])

    @cached_property
    def successors(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {i: set() for i in self.type.vertices}
        for a, b in self.arrows:
            out[a].add(b)
        return {i: frozenset(s) for i, s in out.items()}

    @cached_property
    def predecessors(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {i: set() for i in self.type.vertices}
        for a, b in self.arrows:
            out[b].add(a)
        return {i: frozenset(s) for i, s in out.items()}

    def sources(self) -> list[int]:
        return [i for i in self.type.vertices if not self.predecessors[i]]

    def sinks(self) -> list[int]:
        return [i for i in self.type.vertices if not self.successors[i]]

    def reversed(self) -> "DynkinQuiver":
        return DynkinQuiver(self.type, frozenset((b, a) for a, b in self.arrows))

    def __str__(self):
        return f"{self.type}[" + ",".join(f"{a}-{b}" for a, b in self.sorted_arrows()) + "]"


def all_orientations(t: CartanType) -> Iterator[DynkinQuiver]:
    """All 2^(#edges) orientations, in a canonical order."""
    edges = list(t.edges)
    for flips in itertools.product((False, True), repeat=len(edges)):
        yield DynkinQuiver(t, frozenset((b, a) if f else (a, b) for (a, b), f in zip(edges, flips)))


def reflect_quiver(Q: DynkinQuiver, i: int) -> DynkinQuiver:
    """Reverse every arrow incident to i."""
    return DynkinQuiver(Q.type, frozenset((b, a) if i in (a, b) else (a, b) for a, b in Q.arrows))


def graph_distances(t: CartanType, start: int) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in t.neighbors[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class HeightFunction:
    xi: dict[int, int] = field(hash=False)

    def __getitem__(self, i: int) -> int:
        return self.xi[i]

    def shifted(self, c: int) -> "HeightFunction":
        return HeightFunction({i: v + c for i, v in self.xi.items()})

    def satisfies(self, Q: DynkinQuiver) -> bool:
        return all(self.xi[b] == self.xi[a] - 1 for a, b in Q.arrows)


def height_function(Q: DynkinQuiver, base_vertex: int | None = None, base_value: int = 0) -> HeightFunction:
    """The height function with xi[base_vertex] = base_value.

    Without a base vertex the function is normalized so that min(xi) = 0.
    """
    start = base_vertex if base_vertex is not None else 1
    xi = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in Q.successors[u]:
            if v not in xi:
                xi[v] = xi[u] - 1
                queue.append(v)
        for v in Q.predecessors[u]:
            if v not in xi:
                xi[v] = xi[u] + 1
                queue.append(v)
    shift = base_value if base_vertex is not None else -min(xi.values())
    return HeightFunction({i: xi[i] + shift for i in sorted(xi)})


@dataclass(frozen=True)
class BetaSequence:
    type: CartanType
    word: tuple[int, ...]
    betas: tuple[Root, ...]

    def index(self, beta: Root) -> int:
        """1-based position of beta."""
        return self.betas.index(tuple(beta)) + 1

    def __len__(self):
        return len(self.betas)


def beta_sequence(t: CartanType, word: Sequence[int]) -> BetaSequence:
    betas = []
    for k, i in enumerate(word):
        betas.append(apply_word(t, word[:k], simple_root(t, i)))
    return BetaSequence(t, tuple(word), tuple(betas))


def adapted_w0(Q: DynkinQuiver) -> BetaSequence:
    """Reduced word for w0 adapted to Q: each letter is a source of the
    quiver obtained by reflecting at the previous letters.  Among the sources
    that lengthen the word, the smallest label is taken."""
    t = Q.type
    total = len(root_system(t))
    word: list[int] = []
    betas: list[Root] = []
    cur = Q
    while len(word) < total:
        # a source can be emitted only if it lengthens the word
        for i in sorted(cur.sources()):
            beta = apply_word(t, word, simple_root(t, i))
            if is_positive(beta):
                break
        else:
            raise QuiverError(f"no length-increasing source at step {len(word) + 1}")
        word.append(i)
        betas.append(beta)
        cur = reflect_quiver(cur, i)
    return BetaSequence(t, tuple(word), tuple(betas))


def is_adapted(Q: DynkinQuiver, word: Sequence[int]) -> bool:
    cur = Q
    for i in word:
        if i not in cur.sources():
            return False
        cur = reflect_quiver(cur, i)
    return True


def adapted_coxeter(Q: DynkinQuiver) -> tuple[int, ...]:
    """The Coxeter element adapted to Q as a word: a source-first
    topological order of Q with smallest-label tie-break."""
    indeg = {i: len(Q.predecessors[i]) for i in Q.type.vertices}
    ready = sorted(i for i, d in indeg.items() if d == 0)
    out = []
    while ready:
        i = ready.pop(0)
        out.append(i)
        for j in Q.successors[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return tuple(out)


def check_convexity(bs: BetaSequence) -> bool:
    """If beta_k + beta_l = beta_j (k < l) is a root then k < j < l."""
    pos = {b: k for k, b in enumerate(bs.betas)}
    r = len(bs.betas)
    for k in range(r):
        for l in range(k + 1, r):
            s = tuple(a + b for a, b in zip(bs.betas[k], bs.betas[l]))
            j = pos.get(s)
            if j is not None and not (k < j < l):
                return False
    return True


def kostant_partitions(bs: BetaSequence, c: Sequence[int]) -> set[tuple[int, ...]]:
    """All a >= 0 with sum a_k beta_k = sum c_k beta_k."""
    r = len(bs.betas)
    if len(c) != r:
        raise ValueError(f"partition length {len(c)} != {r}")
    target = tuple(sum(ck * b[i] for ck, b in zip(c, bs.betas)) for i in range(bs.type.rank))
    betas = bs.betas
    memo: dict[tuple[int, tuple[int, ...]], list[tuple[int, ...]]] = {}

    def go(k: int, rem: tuple[int, ...]) -> list[tuple[int, ...]]:
        if not any(rem):
            return [(0,) * (r - k)]
        if k == r:
            return []
        key = (k, rem)
        if key in memo:
            return memo[key]
        out = []
        b = betas[k]
        m = 0
        cur = rem
        while all(x >= 0 for x in cur):
            for tail in go(k + 1, cur):
                out.append((m,) + tail)
            m += 1
            cur = tuple(x - y for x, y in zip(cur, b))
        memo[key] = out
        return out

    return set(go(0, target))


def kp_greater(a: Sequence[int], b: Sequence[int]) -> bool:
    """a > b: at the first differing index a is larger."""
    return tuple(a) > tuple(b)


class NoMinimalPair(ValueError):
    pass


def minimal_pairs(bs: BetaSequence, j: int) -> list[tuple[int, int]]:
    """Minimal pairs (k, l) of beta_j, 1-based indices."""
    beta = bs.betas[j - 1]
    if height(beta) < 2:
        raise NoMinimalPair(f"beta_{j} = {beta} is simple")
    r = len(bs.betas)
    sums = []
    for k in range(1, r + 1):
        for l in range(k + 1, r + 1):
            if tuple(a + b for a, b in zip(bs.betas[k - 1], bs.betas[l - 1])) == beta:
                sums.append((k, l))
    out = []
    for k, l in sums:
        if not any(k < k2 < j < l2 < l for k2, l2 in sums):
            out.append((k, l))
    return out
