import pytest

from qaffine.cartan import (
    CartanType,
    InvalidCartanType,
    apply_word,
    bilinear_form,
    coxeter_number,
    is_positive,
    longest_element,
    reflect,
    root_system,
    simple_root,
    star_involution,
)

A2 = CartanType("A", 2)
D4 = CartanType("D", 4)


@pytest.mark.parametrize("name,count", [("A1", 1), ("A2", 3), ("A5", 15), ("D4", 12), ("D7", 42),
                                        ("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(name, count):
    assert len(root_system(CartanType.parse(name))) == count


def test_a2_roots_and_reflections():
    assert set(root_system(A2).positive) == {(1, 0), (0, 1), (1, 1)}
    assert reflect(A2, 1, (0, 1)) == (1, 1)
    assert apply_word(A2, (1, 2), (1, 0)) == (0, 1)
    assert apply_word(A2, (), (1, 1)) == (1, 1)


def test_bilinear_form():
    assert bilinear_form(A2, (1, 0), (1, 0)) == 2
    assert bilinear_form(A2, (1, 0), (0, 1)) == -1
    assert bilinear_form(A2, (1, 1), (1, 0)) == 1


@pytest.mark.parametrize("name", ["A1", "A2", "A4", "D4", "D5", "E6"])
def test_longest_element_sends_positive_to_negative(name):
    t = CartanType.parse(name)
    w0 = longest_element(t)
    assert len(w0) == len(root_system(t))
    for beta in root_system(t).positive:
        assert not is_positive(apply_word(t, w0, beta))


def test_star_involution():
    assert [star_involution(D4, i) for i in D4.vertices] == [1, 2, 3, 4]
    assert star_involution(A2, 1) == 2
    d5 = CartanType("D", 5)
    assert star_involution(d5, 4) == 5 and star_involution(d5, 5) == 4
    assert star_involution(CartanType("D", 6), 5) == 5
    e6 = CartanType("E", 6)
    assert star_involution(e6, 1) == 6 and star_involution(e6, 2) == 2


def test_coxeter_numbers():
    assert coxeter_number(A2) == 3
    assert coxeter_number(D4) == 6
    assert coxeter_number(CartanType("E", 8)) == 30


def test_cartan_matrix_and_labels():
    assert D4.cartan_matrix[1] == (-1, 2, -1, -1)
    assert CartanType("E", 6).neighbors[4] == frozenset({2, 3, 5})
    assert simple_root(D4, 3) == (0, 0, 1, 0)


@pytest.mark.parametrize("family,rank", [("D", 3), ("E", 9), ("A", 0), ("B", 3)])
def test_invalid_types(family, rank):
    with pytest.raises(InvalidCartanType):
        CartanType(family, rank)
