from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfkit.exact import (
    as_rational,
    binomial,
    factorial,
    falling_factorial,
    format_rational,
    parse_rational,
    rational,
)
from oracles import factorial_loop, pascal

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 6), (10, factorial_loop(10))])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_matches_loop():
    assert [factorial(n) for n in range(60)] == [factorial_loop(n) for n in range(60)]
    assert factorial_loop(10) == 3628800


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_against_pascal():
    rows = pascal(40)
    for n, row in enumerate(rows):
        assert [binomial(n, k) for k in range(n + 1)] == row
    assert binomial(4, 2) == rows[4][2] == 6


@pytest.mark.parametrize("n", range(8))
def test_binomial_boundaries(n):
    assert binomial(n, 0) == 1
    assert binomial(n, n + 2) == 0
    assert binomial(n, -1) == 0


def test_binomial_out_of_range():
    assert binomial(3, 5) == 0


@given(st.integers(2, 300), st.data())
def test_pascal_rule(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_falling_factorial_examples():
    assert falling_factorial(Fraction(7, 3), 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


@pytest.mark.parametrize("m", range(25))
def test_falling_factorial_full_length_is_factorial(m):
    assert falling_factorial(m, m) == factorial(m)


def test_falling_factorial_past_zero_vanishes():
    assert falling_factorial(3, 5) == 0


@pytest.mark.parametrize(
    "p, q, text",
    [(2, 4, "1/2"), (3, -6, "-1/2"), (0, 7, "0"), (6, 3, "2")],
)
def test_rational_canonical(p, q, text):
    value = rational(p, q)
    assert format_rational(value) == text
    assert value.denominator > 0


def test_canonical_zero():
    z = rational(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


@pytest.mark.parametrize("text", ["1.5", "1e3", "", "1/", "/2", "a/b", "1//2"])
def test_parse_rejects_non_canonical_forms(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")


@given(rationals)
def test_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(rationals, rationals)
def test_additive_inverse(a, b):
    assert (a + b) - b == a


@given(rationals, rationals.filter(bool))
def test_multiplicative_inverse(a, b):
    assert (a * b) / b == a


@given(rationals, rationals, rationals)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
