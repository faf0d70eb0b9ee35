from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaffine.exact import (
    QZ,
    EchelonSpan,
    Frac,
    FracZeroDivision,
    InconsistentPayload,
    LaurentPoly,
    PolyZ,
    RatFunc,
    RatFuncZeroDivision,
    SparseMatrix,
    column_space_basis,
    context,
    lcm_denominators,
    neg_q_power,
    rank,
    solve_nullspace,
)

small = st.integers(min_value=-4, max_value=4)
laurents = st.dictionaries(st.integers(-3, 3), small, max_size=4).map(LaurentPoly)
nonzero_laurents = laurents.filter(lambda p: not p.is_zero())
ratfuncs = st.tuples(laurents, nonzero_laurents).map(lambda t: RatFunc.from_laurent(t[0]) / RatFunc.from_laurent(t[1]))
nonzero_ratfuncs = ratfuncs.filter(lambda r: not r.is_zero())

q = Frac.gen(QZ, "q")
z = Frac.gen(QZ, "z")


def _frac_from(num: dict, den: dict) -> Frac:
    def poly(terms):
        out = Frac.const(QZ, 0)
        for (a, b), c in terms.items():
            out = out + Frac.monomial(QZ, {"q": a, "z": b}, c)
        return out
    return poly(num) / poly(den)


mono_terms = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(0, 2)), small, max_size=3)
fracs = st.tuples(mono_terms, mono_terms.filter(lambda d: any(d.values()))).map(lambda t: _frac_from(*t))


# Laurent polynomials ---------------------------------------------------------

def test_laurent_basics():
    p = LaurentPoly({-1: 2, 0: 0, 3: Fraction(1, 2)})
    assert p.valuation() == -1 and p.degree() == 3
    assert p.terms == {-1: 2, 3: Fraction(1, 2)}
    assert p.bar() == LaurentPoly({1: 2, -3: Fraction(1, 2)})
    assert LaurentPoly.neg_q_power(3) == LaurentPoly({3: -1})
    assert LaurentPoly.quantum_integer(3) == LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert (LaurentPoly.q() ** -2) * LaurentPoly.q() ** 2 == LaurentPoly.const(1)
    assert p.evaluate(2) == Fraction(1, 1) + 4


@settings(max_examples=200, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly()
    assert (a * b).bar() == a.bar() * b.bar()


# rational functions in q -------------------------------------------------------

def test_ratfunc_normal_form():
    r = RatFunc.from_laurent(LaurentPoly({2: 1, 0: -1})) / RatFunc.from_laurent(LaurentPoly({1: 1, 0: -1}))
    assert r.is_laurent()
    assert r.numerator == LaurentPoly({1: 1, 0: 1})
    with pytest.raises(RatFuncZeroDivision):
        RatFunc(1) / RatFunc(0)
    assert RatFunc.neg_q_power(-3).evaluate(2) == Fraction(-1, 8)


@settings(max_examples=1000, deadline=None)
@given(ratfuncs, ratfuncs, nonzero_ratfuncs)
def test_ratfunc_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a / c) * c == a
    assert c * c.inverse() == RatFunc(1)
    assert hash(a * c / c) == hash(a)
    assert (a * b).bar() == a.bar() * b.bar()


# rational functions in several variables --------------------------------------------

@settings(max_examples=1000, deadline=None)
@given(fracs, fracs, fracs)
def test_frac_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    if c:
        assert (a / c) * c == a
        assert c.inverse() * c == Frac.const(QZ, 1)


def test_frac_reduction_idempotent():
    f = (z * z - q ** 4) / (z - q * q)
    assert f == z + q * q
    assert Frac(QZ, f.num, f.den) == f
    assert f.den.is_one()
    with pytest.raises(FracZeroDivision):
        f / Frac.const(QZ, 0)


def test_frac_negative_monomials_and_substitute():
    m = Frac.monomial(QZ, {"q": -2, "z": 1}, 3)
    assert m * q * q == z * 3
    XY = context("x", "y")
    x = Frac.gen(XY, "x")
    y = Frac.gen(XY, "y")
    img = ((z - q) / (z + 1)).substitute(XY, {"q": Fraction(3, 5), "z": x * y})
    assert img == (x * y - Fraction(3, 5)) / (x * y + 1)
    assert neg_q_power(3) == -(q ** 3)


# polynomials in z ---------------------------------------------------------------

def test_polyz_division_and_factoring():
    p = PolyZ.from_exponents([2, 6, 6])
    found, rest = p.factor_neg_q_powers(range(-10, 11))
    assert dict(found) == {2: 1, 6: 2} and rest.degree() == 0
    a = PolyZ.from_exponents([1, 2])
    b = PolyZ.from_exponents([2, 3])
    assert a.gcd(b) == PolyZ.from_exponents([2])
    assert a.lcm(b) == PolyZ.from_exponents([1, 2, 3])
    quo, rem = (a * b).divmod(b)
    assert quo == a and rem.is_zero()


# sparse matrices and linear algebra ------------------------------------------------------

def test_sparse_kron_matches_dense():
    A = SparseMatrix.from_rows(2, 2, {0: {0: 1, 1: 2}, 1: {1: 3}})
    B = SparseMatrix.from_rows(2, 2, {0: {1: 1}, 1: {0: 5}})
    K = A.kron(B)
    dense = K.to_dense()
    assert dense[0] == [0, 1, 0, 2]
    assert dense[3] == [0, 0, 15, 0]
    assert (A @ B).transpose() == B.transpose() @ A.transpose()


def test_nullspace_rank_nullity():
    one = Frac.const(QZ, 1)
    M = SparseMatrix.from_rows(3, 4, {
        0: {0: one, 1: q, 2: z},
        1: {0: z, 1: q * z, 2: z * z},
        2: {3: q - z},
    })
    null = solve_nullspace(M)
    assert rank(M) + len(null) == 4
    for v in null:
        assert not M.apply(v)
    assert len(column_space_basis(M)) == rank(M)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_nullspace_property(rows):
    M = SparseMatrix.from_rows(len(rows), 4, {i: {j: Frac.const(QZ, c) * (q ** j + z)
                                                  for j, c in enumerate(r) if c}
                                              for i, r in enumerate(rows)})
    null = solve_nullspace(M)
    assert rank(M) + len(null) == 4
    assert all(not M.apply(v) for v in null)


def test_echelon_span_payload():
    one = Frac.const(QZ, 1)
    span = EchelonSpan(QZ)
    assert span.add({0: one, 1: q}, {0: z})
    assert not span.add({0: q, 1: q * q}, {0: q * z})
    with pytest.raises(InconsistentPayload):
        span.add({0: one * 2, 1: q * 2}, {0: z})
    assert span.contains({0: z, 1: q * z})


def test_lcm_denominators():
    M = SparseMatrix.from_rows(2, 2, {0: {0: 1 / (z - q * q)}, 1: {1: q / ((z - q * q) * (z + q ** 3))}})
    assert lcm_denominators(M) == PolyZ.from_exponents([2, 3])
