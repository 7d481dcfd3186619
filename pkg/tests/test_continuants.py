from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singwords.continuants import (
    continuant_regular,
    continuant_semiregular,
    determinant,
    evaluate_word,
    parse_digits,
    permanent,
    tridiagonal_check,
    tridiagonal_matrix,
)
from singwords.errors import DomainError, SizeError

regular_digits = st.lists(st.integers(1, 30), min_size=1, max_size=8)
semi_digits = st.lists(st.integers(2, 30), min_size=1, max_size=8)


def regular_denominator(digits):
    """Denominator of [0; x1, ..., xn] by folding from the tail."""
    value = Fraction(0)
    for d in reversed(digits):
        value = 1 / (d + value)
    return value.denominator


def semi_denominator(digits):
    """Denominator of 1/(x1 - 1/(x2 - ...))."""
    value = Fraction(0)
    for d in reversed(digits):
        value = 1 / (d - value)
    return value.denominator


def test_regular_examples():
    assert continuant_regular([7]) == 7
    assert continuant_regular([2, 1, 2]) == 8
    assert continuant_regular([1, 1, 1, 1, 1]) == 8
    assert continuant_regular([]) == 1


def test_semiregular_examples():
    assert continuant_semiregular([5, 7]) == 34
    assert continuant_semiregular([4, 5, 6, 4, 6, 3]) == 6827
    assert continuant_semiregular([4, 16, 4, 15, 16, 3]) == 171135


def test_domains():
    with pytest.raises(DomainError):
        continuant_semiregular([2, 1, 3])
    with pytest.raises(DomainError):
        continuant_regular([0, 2])


def test_tridiagonal():
    assert tridiagonal_check([3, 3]) == (10, 8)
    assert tridiagonal_check([4, 5, 6, 4, 6, 3])[1] == 6827
    assert tridiagonal_matrix([2, 3]) == [[2, 1], [1, 3]]
    with pytest.raises(SizeError):
        tridiagonal_check(list(range(2, 14)))


def test_permanent_determinant_generic():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    assert determinant(m) == -3
    assert permanent(m) == 1 * (50 + 48) + 2 * (40 + 42) + 3 * (32 + 35)


def test_evaluate_word():
    example = dict(zip("abcd", (3, 4, 5, 6)))
    assert evaluate_word("bcdbda", example) == 6827
    assert evaluate_word("bdbcda", dict(zip("abcd", (3, 4, 7, 8)))) == 18247
    assert evaluate_word("a", {"a": 5}, kind="regular") == 5
    with pytest.raises(DomainError):
        evaluate_word("ab", {"a": 3})
    with pytest.raises(DomainError):
        evaluate_word("ab", {"a": 4, "b": 3}, strict=True)


def test_parse_digits():
    assert parse_digits("4, 5,6") == (4, 5, 6)
    with pytest.raises(DomainError):
        parse_digits("4,x")


@given(regular_digits)
def test_regular_is_fraction_denominator(digits):
    assert continuant_regular(digits) == regular_denominator(digits)


@given(semi_digits)
def test_semiregular_is_fraction_denominator(digits):
    assert continuant_semiregular(digits) == semi_denominator(digits)


@given(regular_digits)
def test_permanent_identity(digits):
    perm, _ = tridiagonal_check(digits)
    assert perm == continuant_regular(digits)


@given(semi_digits)
def test_determinant_identity(digits):
    _, det = tridiagonal_check(digits)
    assert det == continuant_semiregular(digits)


@given(st.lists(st.integers(1, 50), min_size=1, max_size=20))
def test_reversal_symmetry(digits):
    assert continuant_regular(digits) == continuant_regular(digits[::-1])
    semi = [d + 1 for d in digits]
    assert continuant_semiregular(semi) == continuant_semiregular(semi[::-1])


@given(st.lists(st.integers(2, 20), min_size=2, max_size=12))
def test_semiregular_growth(digits):
    assert continuant_semiregular(digits) > continuant_semiregular(digits[:-1])
