from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from gwseries.errors import DomainError
from gwseries.exact_arith import (
    as_rational,
    divisors,
    format_rational,
    lambert_sigma_coefficients,
    parse_rational,
    sigma,
    sigma_at_half,
)


def brute_divisors(d):
    return [k for k in range(1, d + 1) if d % k == 0]


@pytest.mark.parametrize("d, expected", [(1, 1), (2, 3), (6, 12)])
def test_sigma_examples(d, expected):
    assert sigma(d) == expected
    assert sum(brute_divisors(d)) == expected


@pytest.mark.parametrize("d, expected", [(1, 0), (2, 1), (4, 3)])
def test_sigma_at_half(d, expected):
    assert sigma_at_half(d) == expected


@pytest.mark.parametrize("d, expected", [(1, [1]), (4, [1, 2, 4]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(d, expected):
    assert divisors(d) == expected == brute_divisors(d)


@pytest.mark.parametrize("fn", [sigma, divisors, sigma_at_half])
@pytest.mark.parametrize("bad", [0, -3])
def test_domain_errors(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


def test_sigma_matches_divisor_enumeration_to_ten_thousand():
    for d in range(1, 10**4 + 1):
        assert sigma(d) == sum(divisors(d))


def test_sigma_multiplicative_on_coprime_pairs():
    for a in range(1, 101):
        for b in range(1, 101):
            if gcd(a, b) == 1:
                assert sigma(a * b) == sigma(a) * sigma(b)


def test_lambert_series_is_divisor_sum():
    coeffs = lambert_sigma_coefficients(300)
    assert coeffs[0] == 0
    assert coeffs[1:] == [sum(brute_divisors(d)) for d in range(1, 301)]


def _truncated_product(n_factors, order):
    # prod_{k<=n_factors} k t^k / (1 - t^k), truncated at t^order
    series = [1] + [0] * order
    for k in range(1, n_factors + 1):
        factor = [0] * (order + 1)
        for e in range(k, order + 1, k):
            factor[e] = k
        series = [
            sum(series[i] * factor[n - i] for i in range(n + 1)) for n in range(order + 1)
        ]
    return series


def test_product_form_is_not_the_divisor_sum():
    prod = _truncated_product(3, 8)
    assert prod[1] == 0 != sigma(1)
    assert lambert_sigma_coefficients(8)[1:] == [sigma(d) for d in range(1, 9)]


big = st.integers(min_value=-(10**40), max_value=10**40)
pos = st.integers(min_value=1, max_value=10**40)


@given(big, pos, big, pos)
def test_rational_add_sub_round_trip(p, q, r, s):
    x, y = Fraction(p, q), Fraction(r, s)
    z = (x + y) - y
    assert z == x
    assert gcd(abs(z.numerator), z.denominator) == 1 and z.denominator >= 1


@given(big, pos)
def test_format_parse_round_trip(p, q):
    x = Fraction(p, q)
    text = format_rational(x)
    assert parse_rational(text) == x
    assert ("/" in text) == (x.denominator != 1)


def test_formatting_and_coercion():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(0) == "0"
    with pytest.raises(TypeError):
        as_rational(1.5)
    with pytest.raises(DomainError):
        parse_rational("1/0")
