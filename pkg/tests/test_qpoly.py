"""Exact polynomial / truncated series arithmetic."""

import pytest
from hypothesis import given, strategies as st

from qburge.qpoly import (LaurentPoly, TruncatedSeries,
                          poly_agrees_with_series, first_poly_difference,
                          first_series_difference)


def lp(d):
    return LaurentPoly(dict(d))


small_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6).map(lp)


def test_basic_arith():
    p = lp({0: 1, 1: 1})
    assert p * p == lp({0: 1, 1: 2, 2: 1})
    assert (p + (-p)).is_zero()
    assert p.scale(-1) == lp({-1: 1, 0: 1})
    assert lp({0: 1, 1: 2, 2: 1}).inverse_q() == lp({0: 1, -1: 2, -2: 1})
    assert LaurentPoly.zero().inverse_q().is_zero()


def test_canonical_form_strips_zeros():
    assert LaurentPoly({2: 0, 3: 5}).coeffs == {3: 5}
    assert lp({1: 3}) - lp({1: 3}) == LaurentPoly.zero()


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(small_polys)
def test_inverse_q_involution(p):
    assert p.inverse_q().inverse_q() == p


@given(small_polys, small_polys)
def test_inverse_q_is_ring_hom(a, b):
    assert (a * b).inverse_q() == a.inverse_q() * b.inverse_q()
    assert (a + b).inverse_q() == a.inverse_q() + b.inverse_q()


def test_from_factors_partition_numbers():
    s = TruncatedSeries.from_factors([(e, -1) for e in range(1, 6)], 5)
    assert s.coeffs == [1, 1, 2, 3, 5, 7]


def test_from_factors_trivia():
    assert TruncatedSeries.from_factors([(1, 1)], 3).coeffs == [1, -1, 0, 0]
    assert TruncatedSeries.from_factors([], 2).coeffs == [1, 0, 0]
    with pytest.raises(ValueError):
        TruncatedSeries.from_factors([(0, -1)], 3)


def test_mod5_parts_series():
    # 1/prod over exponents = +-1 mod 5: partitions into such parts
    facs = [(e, -1) for e in range(1, 11) if e % 5 in (1, 4)]
    s = TruncatedSeries.from_factors(facs, 10)
    assert s.coeffs == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]


def test_series_order_truncates_to_min():
    a = TruncatedSeries(5, [1, 1, 1, 1, 1, 1])
    b = TruncatedSeries(3, [1, 0, 0, 0])
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert (a - b).coeffs == [0, 1, 1, 1]


def test_poly_series_agreement():
    p = lp({0: 1, 1: 1})
    s = TruncatedSeries(2, [1, 1, 1])
    assert not poly_agrees_with_series(p, s)
    assert poly_agrees_with_series(p, TruncatedSeries(1, [1, 1]))
    assert poly_agrees_with_series(LaurentPoly.zero(), TruncatedSeries(3))
    with pytest.raises(ValueError):
        poly_agrees_with_series(lp({-1: 1}), s)


def test_first_difference_helpers():
    assert first_poly_difference(lp({0: 1}), lp({0: 1, 3: -2})) == 3
    assert first_poly_difference(lp({0: 1}), lp({0: 1})) is None
    a = TruncatedSeries(4, [1, 2, 3, 4, 5])
    b = TruncatedSeries(4, [1, 2, 0, 4, 5])
    assert first_series_difference(a, b) == 2


def test_min_negative():
    assert lp({0: 1, 3: -1}).min_negative() == (3, -1)
    assert lp({0: 1, 3: 1}).min_negative() is None
