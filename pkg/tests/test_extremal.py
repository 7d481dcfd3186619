import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singwords.continuants import continuant_regular, continuant_semiregular
from singwords.errors import DomainError, SizeError
from singwords.extremal import (
    arrangement_count,
    brute_extremal,
    canonical,
    enumerate_arrangements,
    four_letter_check,
    parse_multiset,
    regular_max_pattern,
    verify_ternary_conjecture,
    word_to_digits,
)
from singwords.ternary import construct_ternary
from singwords.words import is_singular

small_multisets = st.lists(st.integers(2, 6), min_size=1, max_size=6)


def test_enumeration_examples():
    assert list(enumerate_arrangements({1: 1, 2: 1})) == [(1, 2)]
    assert list(enumerate_arrangements({2: 2})) == [(2, 2)]
    assert len(list(enumerate_arrangements({3: 1, 4: 1, 5: 1}))) == 3


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_enumeration_covers_reversal_classes(digits):
    seen = list(enumerate_arrangements(digits))
    assert len(seen) == len(set(seen)) == arrangement_count(Counter(digits))
    classes = {canonical(p) for p in itertools.permutations(digits)}
    assert {canonical(w) for w in seen} == classes


def test_example_values_and_argmax():
    r = brute_extremal([3, 4, 4, 5, 6, 6], "semi-max")
    assert r.value == 6827 and r.unique_up_to_reversal
    assert canonical((4, 5, 6, 4, 6, 3)) in r.argext

    r = brute_extremal([3, 4, 4, 15, 16, 16], "semi-max")
    assert r.value == 171135 and r.argext == (canonical((4, 16, 4, 15, 16, 3)),)

    r = brute_extremal([3, 4, 4, 7, 8, 8], "semi-max")
    assert r.value == 18247 and len(r.argext) == 2


def test_four_letter_class():
    report = four_letter_check({"a": 1, "b": 2, "c": 1, "d": 2}, dict(zip("abcd", (3, 4, 5, 6))))
    assert len(report.singular_words) == 2
    assert sorted(report.values.values()) == [6825, 6827]
    (winner,) = report.maximizers
    assert report.values[winner] == 6827
    assert winner in ("bcdbda", "adbdcb")


def test_errors():
    with pytest.raises(DomainError):
        brute_extremal([1, 2], "semi-max")
    with pytest.raises(DomainError):
        brute_extremal([2, 3], "median")
    with pytest.raises(SizeError):
        brute_extremal([2] * 13)
    with pytest.raises(DomainError):
        parse_multiset("2,x")
    with pytest.raises(DomainError):
        verify_ternary_conjecture(3, (4, 3, 2))


def test_regular_max_pattern_examples():
    assert regular_max_pattern({4: 5}) == (4,) * 5
    assert canonical(regular_max_pattern({1: 2, 2: 1})) == (1, 1, 2)
    assert continuant_regular((2, 1, 1)) == 5


@given(st.lists(st.integers(1, 4), min_size=1, max_size=8))
def test_regular_max_pattern_is_unique_argmax(digits):
    result = brute_extremal(digits, "regular-max")
    pattern = regular_max_pattern(digits)
    assert sorted(pattern) == sorted(digits)
    assert result.argext == (canonical(pattern),)


@given(small_multisets, st.sampled_from(["regular-max", "regular-min", "semi-max", "semi-min"]))
def test_brute_matches_plain_enumeration(digits, objective):
    fn = continuant_semiregular if objective.startswith("semi") else continuant_regular
    values = {canonical(p): fn(p) for p in set(itertools.permutations(digits))}
    best = (max if objective.endswith("max") else min)(values.values())
    result = brute_extremal(digits, objective)
    assert result.value == best
    assert set(result.argext) == {w for w, v in values.items() if v == best}


def test_thread_count_does_not_change_result():
    digits = [2, 3, 3, 4, 5, 5, 6]
    assert brute_extremal(digits, "semi-max", workers=1) == brute_extremal(digits, "semi-max", workers=2)


@given(small_multisets)
def test_semi_argmax_is_singular(digits):
    letters = "abcde"
    ranks = {d: letters[i] for i, d in enumerate(sorted(set(digits)))}
    for w in brute_extremal(digits, "semi-max").argext:
        assert is_singular("".join(ranks[d] for d in w))


def test_ternary_maximizer_small_assignments():
    # several order-preserving assignments into {2..9}; every ternary vector of sum <= 7
    for assignment in ((2, 3, 4), (2, 5, 9), (3, 4, 8), (6, 7, 9)):
        amap = dict(zip("abc", assignment))
        for v in itertools.product(range(8), repeat=3):
            if not 0 < sum(v) <= 7:
                continue
            x, _ = construct_ternary(v)
            digits = word_to_digits(x, amap)
            assert brute_extremal(digits, "semi-max").argext == (canonical(digits),), (assignment, v)


def test_verify_small():
    report = verify_ternary_conjecture(6, (2, 3, 11))
    assert report.ok and report.checked == 83
    assert report.to_dict()["violations"] == []


def test_result_serialization():
    d = brute_extremal([3, 4, 4, 5, 6, 6]).to_dict()
    assert d["value"] == "6827" and d["unique"] is True
    assert d["arrangements"] == [[3, 6, 4, 6, 5, 4]]
