import itertools

import pytest

from qaffine.cartan import CartanType, root_system
from qaffine.quiver import (
    DynkinQuiver,
    NoMinimalPair,
    QuiverError,
    adapted_coxeter,
    adapted_w0,
    all_orientations,
    beta_sequence,
    check_convexity,
    graph_distances,
    height_function,
    is_adapted,
    kostant_partitions,
    kp_greater,
    minimal_pairs,
    reflect_quiver,
)
from qaffine.repetition import tau

A2 = CartanType("A", 2)
A3 = CartanType("A", 3)
D4 = CartanType("D", 4)
D5 = CartanType("D", 5)
Q_A2 = DynkinQuiver.parse(A2, "1-2")


def test_parse_and_json_roundtrip():
    Q = DynkinQuiver.from_json('{"type":"D","rank":4,"arrows":[[1,2],[3,2],[4,2]]}')
    assert Q.sinks() == [2] and Q.sources() == [1, 3, 4]
    assert DynkinQuiver.from_json(Q.to_json()) == Q
    with pytest.raises(QuiverError):
        DynkinQuiver.parse(D4, "1-2,2-3")


def test_reflections():
    assert reflect_quiver(Q_A2, 1) == DynkinQuiver.parse(A2, "2-1")
    inward = DynkinQuiver.parse(D4, "1-2,3-2,4-2")
    assert reflect_quiver(inward, 2) == inward.reversed()
    for Q in all_orientations(D5):
        for i in D5.vertices:
            assert reflect_quiver(reflect_quiver(Q, i), i) == Q


def test_orientation_count():
    assert len(list(all_orientations(D5))) == 16
    assert len(list(all_orientations(A3))) == 4


def test_height_functions():
    assert height_function(Q_A2).xi == {1: 1, 2: 0}
    xi = height_function(DynkinQuiver.parse(A3, "1-2,3-2"), base_vertex=2)
    assert xi.xi == {1: 1, 2: 0, 3: 1}
    for Q in all_orientations(D5):
        xi = height_function(Q)
        assert xi.satisfies(Q)
        for i in D5.vertices:
            dist = graph_distances(D5, i)
            assert all(abs(xi[i] - xi[j]) <= dist[j] for j in D5.vertices)


def test_adapted_word_a2():
    bs = adapted_w0(Q_A2)
    assert bs.word == (1, 2, 1)
    assert bs.betas == ((1, 0), (1, 1), (0, 1))
    assert adapted_coxeter(Q_A2) == (1, 2)
    assert tau(Q_A2, (1, 0)) == (0, 1)
    assert adapted_coxeter(DynkinQuiver.linear(CartanType("A", 5))) == (1, 2, 3, 4, 5)
    assert adapted_w0(DynkinQuiver.linear(CartanType("A", 1))).word == (1,)


@pytest.mark.parametrize("name", ["A4", "D4", "D5", "E6"])
def test_adapted_words_are_reduced_and_adapted(name):
    t = CartanType.parse(name)
    for Q in all_orientations(t):
        bs = adapted_w0(Q)
        assert is_adapted(Q, bs.word)
        assert set(bs.betas) == root_system(t).positive_set
        assert check_convexity(bs)


def test_convexity_detects_a_swap():
    bs = adapted_w0(Q_A2)
    assert check_convexity(bs)
    swapped = beta_sequence(A2, (1, 2, 1))
    bad = type(swapped)(A2, swapped.word, (swapped.betas[1], swapped.betas[0], swapped.betas[2]))
    assert not check_convexity(bad)


def test_kostant_partitions_a2():
    bs = adapted_w0(Q_A2)
    assert kostant_partitions(bs, (1, 0, 1)) == {(1, 0, 1), (0, 1, 0)}
    assert kostant_partitions(bs, (1, 0, 0)) == {(1, 0, 0)}
    assert kp_greater((1, 0, 1), (0, 1, 0))


def test_kostant_partitions_match_brute_force():
    bs = adapted_w0(DynkinQuiver.linear(A3))
    target = (1, 1, 1)
    brute = {a for a in itertools.product(range(2), repeat=6)
             if tuple(sum(x * b[i] for x, b in zip(a, bs.betas)) for i in range(3)) == target}
    c = tuple(1 if b == target else 0 for b in bs.betas)
    assert kostant_partitions(bs, c) == brute


def test_minimal_pairs():
    bs = adapted_w0(Q_A2)
    assert minimal_pairs(bs, 2) == [(1, 3)]
    with pytest.raises(NoMinimalPair):
        minimal_pairs(bs, 1)
    lin = adapted_w0(DynkinQuiver.linear(A3))
    top = lin.index((1, 1, 1))
    pairs = minimal_pairs(lin, top)
    assert pairs and all(k < top < l for k, l in pairs)
