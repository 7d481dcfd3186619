import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singwords.errors import DomainError
from singwords.ternary import (
    Rule,
    base_case_word,
    construct_ternary,
    count_b_runs,
    is_base_case,
    parse_parikh,
    reduce_vector,
    reduction_trace,
    separating_report,
)
from singwords.words import classify_singular, is_singular

from conftest import all_words

vectors = st.tuples(st.integers(0, 25), st.integers(0, 25), st.integers(0, 25)).filter(lambda v: sum(v) > 0)


def test_reduction_examples():
    assert reduce_vector((3, 5, 7)).rule is Rule.REDUCE_C
    assert reduce_vector((3, 5, 7)).next_vector == (3, 5, 0)
    assert reduce_vector((3, 4, 5)).rule is Rule.REDUCE_B
    assert reduce_vector((3, 4, 5)).next_vector == (3, 1, 5)
    assert reduce_vector((3, 1, 5)).next_vector == (3, 1, 2)
    assert reduce_vector((3, 1, 2)).rule is Rule.STOP
    assert reduce_vector((7, 1, 1)).rule is Rule.REDUCE_A


def test_stop_comes_first():
    # n_a + n_b = 1 satisfies both count inequalities; the stop test must win
    assert reduce_vector((1, 0, 4)).rule is Rule.STOP
    assert reduce_vector((0, 1, 4)).rule is Rule.STOP


def test_base_cases():
    assert base_case_word((3, 1, 2)) == "abcaca"
    assert base_case_word((2, 3, 1)) == "abbbca"
    assert base_case_word((0, 4, 0)) == "bbbb"
    assert base_case_word((0, 2, 1)) == "bcb"
    assert classify_singular("abbbca").singular
    with pytest.raises(DomainError):
        base_case_word((2, 2, 2))


def test_construct_examples():
    assert construct_ternary((3, 5, 7))[0] == "acbcbcbcacbcbca"
    assert construct_ternary((3, 7, 5))[0] == "acbbbcbbcacbbca"
    assert construct_ternary((5, 0, 0))[0] == "aaaaa"
    with pytest.raises(DomainError):
        construct_ternary((0, 0, 0))
    with pytest.raises(DomainError):
        construct_ternary((1, -1, 2))


def test_separating_and_runs():
    report = separating_report("acbcbcbcacbcbca", "abc")
    assert report.separating == {"c"}
    assert report.c_inequality and not report.a_inequality
    # every length-2 factor of a(ca)^m is ac or ca, so c separates too
    assert separating_report("acacaca").separating == {"a", "c"}
    assert separating_report("acacbca").separating == {"c"}
    assert separating_report("abab").separating == {"a", "b"}
    assert count_b_runs("acbbbcbbcacbbca") == 3
    assert count_b_runs("bbbb") == 1
    assert count_b_runs("acacaca") == 0


def test_parse_parikh():
    assert parse_parikh("a=3,b=5,c=7") == (3, 5, 7)
    assert parse_parikh("c=2") == (0, 0, 2)
    for bad in ("a=x", "d=1", "a3", "a=-1"):
        with pytest.raises(DomainError):
            parse_parikh(bad)


@given(vectors)
def test_trace_terminates_and_shrinks(v):
    trace = reduction_trace(v)
    assert trace[-1].rule is Rule.STOP
    assert is_base_case(trace[-1].vector)
    for state in trace[:-1]:
        assert sum(state.next_vector) < sum(state.vector)


@given(vectors)
def test_construction_is_singular(v):
    x, rx = construct_ternary(v)
    assert (x.count("a"), x.count("b"), x.count("c")) == v
    assert rx == x[::-1]
    assert is_singular(x)
    assert x[:1] <= rx[:1]


def test_uniqueness_exhaustive():
    found: dict[tuple, set[str]] = {}
    for x in all_words("abc", 9, min_len=1):
        if is_singular(x):
            found.setdefault((x.count("a"), x.count("b"), x.count("c")), set()).add(x)
    for v in itertools.product(range(10), repeat=3):
        if 0 < sum(v) <= 9:
            assert found[v] == set(construct_ternary(v)), v


def test_other_letters():
    assert construct_ternary((3, 5, 7), "xyz")[0] == "xzyzyzyzxzyzyzx"


def test_run_count_and_forbidden_bigrams():
    for x in all_words("abc", 9, min_len=1):
        if not is_singular(x):
            continue
        n_a, n_b, n_c = (x.count(c) for c in "abc")
        delta = n_c - n_a + 1
        if delta and n_b >= abs(delta) and len(x) - n_c > 1:
            assert count_b_runs(x) == abs(delta), x
        if delta > 0:
            assert "ab" not in x and "ba" not in x, x
        if delta < 0:
            assert "bc" not in x and "cb" not in x, x


def test_singular_words_begin_or_end_with_least_letter():
    for x in all_words("abc", 8, min_len=1):
        if "a" in x and is_singular(x):
            assert x[0] == "a" or x[-1] == "a", x
