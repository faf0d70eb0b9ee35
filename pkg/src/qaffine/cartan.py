"""Simply-laced finite root systems: roots, reflections, w0, the involution *."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InvalidCartanType(f"no simply-laced type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip().upper()
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        if self.family == "A":
            return tuple((i, i + 1) for i in range(1, n))
        if self.family == "D":
            chain = [(i, i + 1) for i in range(1, n - 1)]
            return tuple(chain + [(n - 2, n)])
        # Bourbaki labelling: 1-3-4-...-n chain, 2 attached to 4
        return tuple([(1, 3)] + [(i, i + 1) for i in range(3, n)] + [(2, 4)])

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = {i: set() for i in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {i: frozenset(s) for i, s in nb.items()}

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(
            tuple(2 if i == j else (-1 if j in self.neighbors[i] else 0) for j in self.vertices)
            for i in self.vertices
        )

    def coxeter_number(self) -> int:
        return coxeter_number(self)


def coxeter_number(t: CartanType) -> int:
    if t.family == "A":
        return t.rank + 1
    if t.family == "D":
        return 2 * t.rank - 2
    return {6: 12, 7: 18, 8: 30}[t.rank]


def simple_root(t: CartanType, i: int) -> Root:
    v = [0] * t.rank
    v[i - 1] = 1
    return tuple(v)


def bilinear_form(t: CartanType, beta: Sequence[int], gamma: Sequence[int]) -> int:
    a = t.cartan_matrix
    total = 0
    for i, bi in enumerate(beta):
        if bi:
            row = a[i]
            total += bi * sum(row[j] * g for j, g in enumerate(gamma) if g)
    return total


def reflect(t: CartanType, i: int, beta: Sequence[int]) -> Root:
    """s_i on the root lattice (simple-root coordinates)."""
    c = bilinear_form(t, beta, simple_root(t, i))
    out = list(beta)
    out[i - 1] -= c
    return tuple(out)


def reflect_weight(t: CartanType, i: int, lam: Sequence[int]) -> tuple[int, ...]:
    """s_i on the weight lattice (fundamental-weight coordinates)."""
    li = lam[i - 1]
    row = t.cartan_matrix[i - 1]
    return tuple(x - li * row[j] for j, x in enumerate(lam))


def apply_word(t: CartanType, word: Iterable[int], beta: Sequence[int], *, weight=False) -> Root:
    """s_{w1} s_{w2} ... s_{wk} (beta): the rightmost letter acts first."""
    out = tuple(beta)
    act = reflect_weight if weight else reflect
    for i in reversed(list(word)):
        out = act(t, i, out)
    return out


def is_positive(beta: Sequence[int]) -> bool:
    return any(beta) and all(c >= 0 for c in beta)


def height(beta: Sequence[int]) -> int:
    """|beta| = sum of absolute coefficients."""
    return sum(abs(c) for c in beta)


class RootSystem:
    def __init__(self, t: CartanType):
        self.type = t
        self.simple = [simple_root(t, i) for i in t.vertices]
        seen = set(self.simple)
        frontier = list(self.simple)
        while frontier:
            nxt = []
            for b in frontier:
                for i in t.vertices:
                    r = reflect(t, i, b)
                    if is_positive(r) and r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        self.positive = sorted(seen, key=lambda r: (height(r), r))
        self.positive_set = frozenset(seen)

    def __len__(self):
        return len(self.positive)

    def is_root(self, beta: Sequence[int]) -> bool:
        b = tuple(beta)
        return b in self.positive_set or tuple(-x for x in b) in self.positive_set

    def is_positive_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self.positive_set

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        t = self.type
        word: list[int] = []
        while True:
            # w s_i is longer than w iff w(alpha_i) > 0
            for i in t.vertices:
                if is_positive(apply_word(t, word, simple_root(t, i))):
                    word.append(i)
                    break
            else:
                return tuple(word)

    @cached_property
    def star(self) -> dict[int, int]:
        t = self.type
        out = {}
        for i in t.vertices:
            img = apply_word(t, self.longest_word, simple_root(t, i))
            neg = tuple(-c for c in img)
            out[i] = neg.index(1) + 1
        return out

    def highest_root(self) -> Root:
        return max(self.positive, key=height)


@lru_cache(maxsize=None)
def root_system(t: CartanType) -> RootSystem:
    return RootSystem(t)


def build_root_system(t: CartanType) -> RootSystem:
    return root_system(t)


def longest_element(t: CartanType) -> tuple[int, ...]:
    return root_system(t).longest_word


def star_involution(t: CartanType, i: int) -> int:
    return root_system(t).star[i]
