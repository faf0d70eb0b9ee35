import pytest

from qaffine.cartan import CartanType
from qaffine.denominators import (
    UnsupportedType,
    build_gammaJ,
    build_J,
    check_double_pole_region,
    denom_A,
    denom_D,
    denominator,
    klr_parameters,
    klr_polynomial,
    pole_order,
    verify_lemma34,
    verify_thm42,
)
from qaffine.quiver import DynkinQuiver, all_orientations

A2 = CartanType("A", 2)
D4 = CartanType("D", 4)
Q_A2 = DynkinQuiver.parse(A2, "1-2")


@pytest.mark.parametrize("k,l,expected", [
    (1, 1, (2, 6)),
    (2, 2, (2, 4, 4, 6)),
    (1, 4, (4,)),
    (4, 1, (4,)),
    (4, 4, (2, 6)),
    (3, 4, (4,)),
    (1, 2, (3, 5)),
])
def test_type_d_rank4_table(k, l, expected):
    assert denom_D(k, l, 4).exponents == expected


def test_type_d_rank6_spot_values():
    assert denom_D(2, 3, 6).exponents == (3, 5, 7, 9)
    assert denom_D(1, 1, 6).exponents == (2, 10)
    assert denom_D(6, 6, 6).exponents == (2, 6, 10)
    assert denom_D(5, 6, 6).exponents == (4, 8)


@pytest.mark.parametrize("n", range(4, 10))
def test_type_d_symmetric(n):
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            assert denom_D(k, l, n).exponents == denom_D(l, k, n).exponents


def test_type_a_table():
    assert denom_A(1, 1, 2).exponents == (2,)
    assert denom_A(1, 2, 3).exponents == (3,)
    assert denom_A(2, 2, 3).exponents == (2, 4)
    for n in range(1, 8):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                assert max(denom_A(k, l, n).multiplicities().values()) == 1


def test_pole_orders():
    assert pole_order(denom_D(2, 2, 4), 4) == 2
    assert pole_order(denom_D(1, 1, 4), 2) == 1
    assert pole_order(denom_D(1, 1, 4), 0) == 0
    assert pole_order(denom_D(1, 1, 4), -2) == 0


def test_exceptional_types_refused():
    with pytest.raises(UnsupportedType, match="conjectural"):
        denominator(CartanType("E", 6), 1, 1)
    with pytest.raises(ValueError):
        denom_D(0, 1, 4)


def test_gamma_j_a2_golden():
    J = build_J(Q_A2)
    assert [(x.vertex, x.root_index) for x in J] == [((1, 1), 1), ((1, -1), 2)]
    assert J[0].spectral_exponent() == 4
    g = build_gammaJ(A2, J)
    assert g.arrows() == [((1, -1), (1, 1), 1)]
    assert g.cartan == [[2, -1], [-1, 2]]
    assert verify_thm42(Q_A2)


def test_klr_parameters_follow_pole_orders():
    g = build_gammaJ(A2, build_J(Q_A2))
    assert klr_parameters(g, 0, 0) is None
    assert klr_polynomial(g, 0, 0) == "0"
    # the only arrow runs from J[1] to J[0]
    assert klr_parameters(g, 1, 0) == (1, 0)
    assert klr_polynomial(g, 1, 0) == "(u-v)"
    assert klr_polynomial(g, 0, 1) == "(v-u)"
    lin = DynkinQuiver.linear(CartanType("A", 3))
    g3 = build_gammaJ(lin.type, build_J(lin))
    far = [(a, b) for a in range(3) for b in range(3)
           if a != b and abs(g3.elements[a].root_index - g3.elements[b].root_index) == 2]
    assert all(klr_polynomial(g3, a, b) == "1" for a, b in far)


def test_gamma_j_d4():
    Q = DynkinQuiver.parse(D4, "1-2,3-2,4-2")
    g = build_gammaJ(D4, build_J(Q))
    assert len(g.elements) == 4 and len(g.arrows()) == 3
    assert [list(r) for r in D4.cartan_matrix] == g.cartan


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "D4", "D5"])
def test_gamma_j_is_reversed_quiver_small(name):
    t = CartanType.parse(name)
    assert all(verify_thm42(Q) for Q in all_orientations(t))


def test_j_pole_orders_case_analysis():
    for Q in all_orientations(CartanType("D", 6)):
        rep = verify_lemma34(Q)
        assert rep.ok and rep.max_order <= 1
        assert rep.case3_absent and rep.case4_ok and rep.case12_ok
    with pytest.raises(UnsupportedType):
        verify_lemma34(Q_A2)


def test_double_pole_region_small():
    assert all(check_double_pole_region(n) for n in range(4, 8))
