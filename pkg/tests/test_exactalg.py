from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzcert.errors import InputError
from syzcert.exactalg import (
    Polynomial,
    PowerSeries,
    binom_poly,
    elem_sym,
    format_rational,
    is_integer_valued,
    parse_rational,
    poly_eval_int,
    series_quotient_expand,
)

from oracles import brute_elem_sym

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_polys = st.lists(small_fracs, max_size=6).map(Polynomial)


def P(*coeffs):
    return Polynomial(coeffs)


def test_rational_text_form():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-5, 2)) == "-5/2"
    assert format_rational(Fraction(4, -6)) == "-2/3"
    assert parse_rational(" -10/4 ") == Fraction(-5, 2)
    assert parse_rational("0") == Fraction(0)
    assert Fraction(0).denominator == 1


@pytest.mark.parametrize("bad", ["x", "1.5", "1/0", "", "1e3", "3/-2", "--1"])
def test_parse_rational_rejects(bad):
    with pytest.raises(InputError):
        parse_rational(bad)


def test_polynomial_trims_trailing_zeros():
    p = P(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    z = P(0, 0)
    assert z.is_zero() and z.coeffs == ()
    assert z.degree == float("-inf")
    assert z.degree < 0
    assert z.to_text() == "0"


def test_polynomial_text_roundtrip():
    p = P(1, Fraction(3, 2), Fraction(1, 2))
    assert p.to_text() == "1 3/2 1/2"
    assert Polynomial.from_text(p.to_text()) == p
    assert str(p) == "1/2*t^2 + 3/2*t + 1"
    assert str(P(0, -1, 0, 1)) == "t^3 - t"


@pytest.mark.parametrize(
    "shift,n,expected",
    [
        (2, 2, (1, Fraction(3, 2), Fraction(1, 2))),
        (0, 1, (0, 1)),
    ],
)
def test_binom_poly_examples(shift, n, expected):
    assert binom_poly(shift, n) == Polynomial(expected)


def test_binom_poly_value():
    assert poly_eval_int(binom_poly(3, 3), 1) == 4


@pytest.mark.parametrize("n", [0, -1])
def test_binom_poly_rejects_nonpositive(n):
    with pytest.raises(InputError):
        binom_poly(0, n)


@given(st.integers(1, 12), st.integers(0, 40))
def test_binom_poly_matches_integer_binomial(n, m):
    value = poly_eval_int(binom_poly(0, n), m)
    assert value == comb(m, n)
    if m < n:
        assert value == 0


@given(st.integers(-15, 15), st.integers(1, 8), st.integers(0, 30))
def test_binom_poly_shift_matches_comb(shift, n, m):
    if m + shift >= 0:
        assert binom_poly(shift, n)(m) == comb(m + shift, n)


def test_binom_poly_leading_coefficient():
    for n in range(1, 10):
        p = binom_poly(-3, n)
        assert p.degree == n
        assert p.leading == Fraction(1, factorial(n))


def test_poly_eval_examples():
    assert poly_eval_int(P(1, 2, 1), 3) == 16
    assert poly_eval_int(P(2, 0, 2), 2) == 10
    assert poly_eval_int(Polynomial(), 7) == 0


def test_elem_sym_examples():
    assert elem_sym([1, 2, 3], 1) == 6
    assert elem_sym([1, 2, 3], 2) == 11
    assert elem_sym([5, -7], 0) == 1
    assert elem_sym([], 0) == 1
    with pytest.raises(InputError):
        elem_sym([1, 2], 3)


@given(st.lists(small_fracs, max_size=7), st.data())
def test_elem_sym_matches_brute_force(values, data):
    j = data.draw(st.integers(0, len(values)))
    assert elem_sym(values, j) == brute_elem_sym(values, j)


@given(st.lists(small_fracs, max_size=7))
def test_elem_sym_generating_identity(values):
    r = len(values)
    lhs = Polynomial.constant(1)
    for v in values:
        lhs = lhs * Polynomial.linear(1, v)
    rhs = sum((Polynomial.monomial(elem_sym(values, j), r - j) for j in range(r + 1)), Polynomial())
    assert lhs == rhs


@given(small_polys, small_polys, st.integers(-10, 10))
def test_ring_axioms_pointwise(p, q, m):
    assert (p + q)(m) == p(m) + q(m)
    assert (p - q)(m) == p(m) - q(m)
    assert (p * q)(m) == p(m) * q(m)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms_symbolic(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p


@given(small_polys, small_polys, st.integers(0, 12))
def test_series_product_matches_truncated_polynomial_product(p, q, order):
    s = PowerSeries.from_polynomial(p, order) * PowerSeries.from_polynomial(q, order)
    assert s == PowerSeries.from_polynomial(p * q, order)


def test_series_length_and_order():
    s = PowerSeries([1, 2, 3, 4, 5], 2)
    assert len(s) == 3 and s.coeffs == (1, 2, 3)
    assert len(PowerSeries([1], 4)) == 5


@pytest.mark.parametrize(
    "degrees,n,order,expected",
    [
        ([], 2, 3, [1, 3, 6, 10]),
        ([2], 3, 2, [1, 4, 9]),
        ([4], 3, 4, [1, 4, 10, 20, 34]),
    ],
)
def test_series_quotient_examples(degrees, n, order, expected):
    assert list(series_quotient_expand(degrees, n, order)) == expected


def test_series_quotient_rejects_bad_degree():
    with pytest.raises(InputError):
        series_quotient_expand([0], 3, 4)


def test_integer_valued():
    assert is_integer_valued(binom_poly(0, 5))
    assert not is_integer_valued(P(0, 0, Fraction(1, 3)))
    assert is_integer_valued(P(1, Fraction(3, 2), Fraction(1, 2)))


def test_polynomials_are_hashable_values():
    assert len({P(1, 2), P(1, 2, 0), P(2)}) == 2
