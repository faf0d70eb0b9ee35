from collections import Counter

import pytest

from qaffine.qpoch import (
    IndexOverflow,
    PochExpr,
    a_closed,
    a_recursive,
    check_ad_identity,
    equiv,
    in_range_pairs,
    reduce,
    scale_z,
    verify_rank,
)


def test_scaling_shifts_indices():
    e = PochExpr(4, {0: 1})
    assert scale_z(e, 2) == PochExpr(4, {2: 1})
    assert scale_z(e, 0) == e


def test_reduction_rule():
    n = 4
    r = reduce(PochExpr.ratio(n, [0], [4 * n - 4]))
    assert r.as_counter() == Counter({0: 1}) and not r.residual.factors
    r = reduce(PochExpr.ratio(n, [-2], [4 * n - 6]))
    assert r.as_counter() == Counter({2: 1})
    assert reduce(PochExpr(n, {3: 1})).residual == PochExpr(n, {3: 1})
    assert equiv(PochExpr(n, {1: 2}), PochExpr(n, {1: 2}))


def test_reduction_idempotent():
    e = a_closed(2, 3, 6) * scale_z(a_closed(1, 1, 6), 5)
    r = reduce(e)
    assert reduce(r.residual).residual == r.residual


def test_closed_forms():
    assert a_closed(1, 1, 4) == PochExpr.ratio(4, [0, 8, 4, 12], [2, 6, 6, 10])
    n = 6
    assert a_closed(1, n, n) == PochExpr.ratio(n, [n - 2, 3 * n - 2], [n, 3 * n - 4])
    assert a_closed(3, 2, 5) == a_closed(2, 3, 5)


def test_recursion_pattern():
    n = 5
    lhs = a_recursive(n, 2, n)
    rhs = scale_z(a_closed(n, 1, n), -1) * scale_z(a_closed(n, 1, n), 1)
    assert lhs == rhs
    assert a_recursive(1, 1, n) == a_closed(1, 1, n)


@pytest.mark.parametrize("n", range(4, 10))
def test_recursive_matches_closed(n):
    assert all(equiv(a_recursive(k, l, n), a_closed(k, l, n)) for k, l in in_range_pairs(n))


@pytest.mark.parametrize("n", range(4, 10))
def test_ad_identity(n):
    assert verify_rank(n) == {"recursive_vs_closed": True, "ad_identity": True}


@pytest.mark.parametrize("n", range(4, 9))
def test_ad_identity_with_spin_column(n):
    assert all(check_ad_identity(k, n, n) for k in range(1, n - 1))


def test_guards():
    with pytest.raises(IndexOverflow):
        PochExpr(4, {33: 1})
    with pytest.raises(ValueError):
        a_closed(4, 4, 4)
