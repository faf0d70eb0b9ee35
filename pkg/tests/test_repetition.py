import pytest

from qaffine.cartan import CartanType
from qaffine.quiver import DynkinQuiver, all_orientations, height_function
from qaffine.repetition import (
    ARQuiver,
    ParityError,
    ar_quiver,
    boundary_check,
    build_phi,
    check_additivity,
    check_injectives,
    check_nakayama,
    drinfeld_datum,
    gamma_i,
    m_i,
    monomial_evaluation,
    parity_sign,
)

A2 = CartanType("A", 2)
Q_A2 = DynkinQuiver.parse(A2, "1-2")


def test_gamma_a2_and_linear():
    assert gamma_i(Q_A2, 1) == (1, 0)
    assert gamma_i(Q_A2, 2) == (1, 1)
    lin = DynkinQuiver.linear(CartanType("A", 4))
    assert gamma_i(lin, 4) == (1, 1, 1, 1)
    assert gamma_i(lin, 1) == (1, 0, 0, 0)


def test_phi_a2_golden():
    phi = build_phi(Q_A2)
    assert phi(1, 1) == ((1, 0), 0)
    assert phi(2, 0) == ((1, 1), 0)
    assert phi(1, -1) == ((0, 1), 0)
    assert phi(2, -2) == ((1, 0), -1)
    assert phi.inverse((1, 0), 0) == (1, 1)
    assert phi.inverse((0, 1), 0) == (1, -1)


def test_ar_quiver_a2_golden():
    ar = ar_quiver(Q_A2)
    assert ar.vertices == {(1, 1), (2, 0), (1, -1)}
    assert sorted(ar.arrows) == [((1, -1), (2, 0)), ((2, 0), (1, 1))]
    assert ar.path_exists((1, -1), (1, 1))
    assert ar.path_exists((2, 0), (2, 0))
    assert not ar.path_exists((1, 1), (1, -1))
    assert (m_i(Q_A2, 1), m_i(Q_A2, 2)) == (1, 0)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_type_d_structure(n):
    t = CartanType("D", n)
    for Q in all_orientations(t):
        ar = ar_quiver(Q)
        assert len(ar.vertices) == n * (n - 1)
        assert all(m_i(Q, k) == n - 2 for k in range(1, n - 1))
        if n % 2 == 0:
            assert m_i(Q, n - 1) == m_i(Q, n) == n - 2
        else:
            # the spin nodes are swapped by * and share the total
            assert m_i(Q, n - 1) + m_i(Q, n) == 2 * n - 4
        assert check_injectives(ar)
        assert check_nakayama(Q, ar.xi)
        assert check_additivity(ar)


def test_phi_on_injectives_and_sources():
    for Q in all_orientations(CartanType("D", 5)):
        xi = height_function(Q)
        phi = build_phi(Q, xi)
        for i in Q.type.vertices:
            assert phi(i, xi[i]) == (gamma_i(Q, i), 0)
        for k in Q.sources():
            assert phi.inverse(tuple(int(j == k) for j in Q.type.vertices), 0) == (k, xi[k])
        assert boundary_check(Q, xi, phi)


def test_phi_window_is_injective():
    Q = DynkinQuiver.parse(CartanType("D", 4), "1-2,3-2,4-2")
    phi = build_phi(Q, window=(-30, 30))
    assert len(set(phi.forward.values())) == len(phi.forward)
    assert ARQuiver(Q, height_function(Q), phi).vertices == ar_quiver(Q).vertices


def test_monomials_and_parity():
    xi = height_function(Q_A2)
    assert monomial_evaluation(xi, 1, 1, 3) == 4
    with pytest.raises(ParityError):
        monomial_evaluation(xi, 1, 0, 3)
    for Q in all_orientations(CartanType("D", 5)):
        xi = height_function(Q)
        for a, b in Q.arrows:
            assert parity_sign(xi, a) == -parity_sign(xi, b)
    d4 = DynkinQuiver.parse(CartanType("D", 4), "1-2,3-2,4-2")
    assert monomial_evaluation(height_function(d4), 2, 0, 6) == 6
    datum = drinfeld_datum(xi, 1, 8)
    assert datum.vertex == 1 and datum.q_exponent == -8
