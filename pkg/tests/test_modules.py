from fractions import Fraction

import pytest

from qaffine.denominators import denom_A, denom_D
from qaffine.exact import QZ, Frac, SparseMatrix
from qaffine.modules.base import RelationError, evaluate, module_from_actions, tensor
from qaffine.modules.intertwiner import (
    IntertwinerError,
    commutes,
    extract_denominator,
    solve_intertwiner,
)
from qaffine.modules.reps import spin_rep, type_a_minuscule, vector_labels, vector_rep
from qaffine.modules.rmatrix import c_coefficient, chain_position, precedes, rnorm_11

q = Frac.gen(QZ, "q")
z = Frac.gen(QZ, "z")


def _image(M, gen, label):
    mat = dict(M.generators())[gen]
    col = M.index(label)
    return {M.labels[r]: v for r, row in mat.rows.items() for c, v in row.items() if c == col}


def test_vector_rep_actions():
    V = vector_rep(4)
    assert V.dim == 8
    assert vector_labels(4) == ["1", "2", "3", "4", "-4", "-3", "-2", "-1"]
    one = Frac.const(QZ, 1)
    assert _image(V, "e0", "2") == {"-1": one}
    assert _image(V, "f4", "3") == {"-4": one}
    assert _image(V, "e4", "-3") == {"4": one}


def test_spin_rep_actions_and_weight():
    S = spin_rep(4, 1, serre=True)
    assert S.dim == 8
    top = S.labels[S.highest]
    assert top == (1, 1, 1, 1)
    # pairings with h_1..h_4 of (1/2)(e1+...+e4) are those of the fundamental weight of node 4
    assert S.weights[S.highest][1:] == (0, 0, 0, 1)
    img = _image(S, "e0", (1, 1, -1, -1))
    assert list(img) == [(-1, -1, -1, -1)]
    assert spin_rep(5, -1).labels[spin_rep(5, -1).highest] == (1, 1, 1, 1, -1)


@pytest.mark.parametrize("n", [4, 5])
def test_vector_and_spin_relations(n):
    vector_rep(n, serre=True)
    spin_rep(n, 1, serre=n == 4)
    spin_rep(n, -1)


def test_broken_module_is_rejected():
    with pytest.raises(RelationError):
        module_from_actions("D", 4, list("ab"), [(0,) * 5, (0,) * 5], {1: [(0, 1)]}, 0, "bad").verify()


def test_evaluation_twists_compose():
    V = vector_rep(4)
    assert evaluate(V, 1).e[0] == V.e[0]
    x = Frac.monomial(QZ, {"q": 2})
    twice = evaluate(evaluate(V, x), z)
    once = evaluate(V, x * z)
    assert twice.e[0] == once.e[0] and twice.f[0] == once.f[0]


def test_tensor_product_relations():
    V = vector_rep(4)
    T = tensor(V, evaluate(V, z))
    assert T.dim == 64
    assert T.weights[T.index(("1", "-2"))] == tuple(a + b for a, b in zip(V.weights[0], V.weights[6]))
    T.verify()


# closed-form R-matrix -------------------------------------------------------------

def test_basis_order():
    n = 4
    assert [chain_position(l, n) for l in vector_labels(n)] == [1, 2, 3, 4, 4, 5, 6, 7]
    assert precedes("3", "-4", n) and precedes("1", "-1", n)
    assert not precedes("4", "-4", n) and not precedes("-4", "4", n)


def test_c_coefficients_at_incomparable_pair_agree():
    n = 4
    # either branch of the definition gives the same value on n, n-bar
    top = q ** (2 * n - 2)
    expected = (1 - q * q) * z * (1 - top)
    assert c_coefficient("4", "-4", n) == expected
    assert c_coefficient("-4", "4", n) == expected


@pytest.mark.parametrize("n", [4, 5])
def test_rnorm_entries(n):
    R = rnorm_11(n)
    one = Frac.const(QZ, 1)
    assert R.apply_to(("1", "1")) == {("1", "1"): one}
    img = R.apply_to(("1", "2"))
    assert img[("1", "2")] == (1 - q * q) / (z - q * q)
    assert img[("2", "1")] == q * (z - 1) / (z - q * q)
    assert R.apply_to(("2", "1"))[("2", "1")] == (1 - q * q) * z / (z - q * q)
    d = (z - q * q) * (z - q ** (2 * n - 2))
    assert R.apply_to(("1", "-1"))[("-1", "1")] == (q * q * z - q ** (2 * n - 2)) * (z - 1) / d


@pytest.mark.parametrize("n", [4, 5])
def test_rnorm_commutes(n):
    R = rnorm_11(n)
    assert commutes(R.matrix, R.source, R.target)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_rnorm_denominator(n):
    assert extract_denominator(rnorm_11(n)).exponents == (2, 2 * n - 2)


@pytest.mark.parametrize("n", [4, 5])
def test_solver_reproduces_closed_form(n):
    assert solve_intertwiner(vector_rep(n), vector_rep(n)).matrix == rnorm_11(n).matrix


def test_identity_has_trivial_denominator():
    I = SparseMatrix.identity(4, Frac.const(QZ, 1))
    assert extract_denominator(I, n=4).exponents == ()


# spin modules and the solver ------------------------------------------------------------

@pytest.mark.parametrize("n,left,right,k,l", [
    (4, ("spin", 1), ("spin", 1), 4, 4),
    (4, ("spin", -1), ("spin", 1), 3, 4),
    (4, ("vector",), ("spin", 1), 1, 4),
    (4, ("spin", -1), ("spin", -1), 3, 3),
    (5, ("spin", 1), ("spin", 1), 5, 5),
    (5, ("spin", -1), ("spin", 1), 4, 5),
    (5, ("vector",), ("spin", 1), 1, 5),
    (5, ("vector",), ("spin", -1), 1, 4),
])
def test_spin_denominators(n, left, right, k, l):
    def build(spec):
        return vector_rep(n, serre=False) if spec[0] == "vector" else spin_rep(n, spec[1])
    R = solve_intertwiner(build(left), build(right))
    assert extract_denominator(R).exponents == denom_D(k, l, n).exponents


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_a_closed_form_against_solver(n):
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            R = solve_intertwiner(type_a_minuscule(n, k), type_a_minuscule(n, l))
            assert extract_denominator(R).exponents == denom_A(k, l, n).exponents


@pytest.mark.parametrize("e", [2, 6])
def test_solver_fails_at_poles(e):
    V = vector_rep(4)
    with pytest.raises(IntertwinerError):
        solve_intertwiner(V, V, z=Frac.monomial(QZ, {"q": e}))


def test_solver_at_regular_specialization():
    V = vector_rep(4)
    R = solve_intertwiner(V, V, z=Frac.const(QZ, Fraction(1)))
    assert R.matrix == rnorm_11(4).matrix.map(lambda v: v.substitute(QZ, {"q": q, "z": 1}))
