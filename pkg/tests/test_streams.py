import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singwords.words import OrderedAlphabet, Ordering, is_reversible_factorization, lex_compare
from singwords.streams import (
    BiWord,
    Stream,
    balance_check_biword,
    first_difference,
    lyndon_prefix_check,
    markoff_check,
    stream_compare,
    window_singular_check,
)

from conftest import words_over

tails = words_over("ab", 4, min_size=1)
FIB = "abaab"


def test_stream_compare_examples():
    assert stream_compare(Stream("", "ab"), Stream("", "ab")) is Ordering.EQUAL
    assert stream_compare(Stream("", "a"), Stream("", "ab")) is Ordering.LESS
    assert stream_compare(Stream("a", "ba"), Stream("", "ab")) is Ordering.EQUAL
    # a finite prefix of a stream is greater than the stream
    assert stream_compare("aba", Stream("", "ab")) is Ordering.GREATER
    assert lex_compare(Stream("", "ab"), "abb") is Ordering.LESS


@given(words_over("ab", 4), words_over("ab", 3, min_size=1), words_over("ab", 4), words_over("ab", 3, min_size=1))
def test_stream_compare_agrees_with_long_prefixes(p1, q1, p2, q2):
    s, t = Stream(p1, q1), Stream(p2, q2)
    n = 60
    a, b = s.prefix(n), t.prefix(n)
    expected = Ordering.EQUAL if a == b else (Ordering.LESS if a < b else Ordering.GREATER)
    assert stream_compare(s, t) is expected
    assert first_difference(s, t) == next((i for i in range(n) if a[i] != b[i]), None)


def test_stream_shift():
    s = Stream("ab", "cde")
    for i in range(12):
        assert s.shift(i).prefix(10) == s.prefix(i + 10)[i:]


def test_biword_coordinates():
    x = BiWord("xy", "ABC", "pq")
    assert x.window(-4, 7) == "xyxyABCpqpq"
    assert x.letter(-1) == "y"
    assert x.forward(1).prefix(5) == "BCpqp"
    assert x.backward(2).prefix(5) == "BAyxy"
    with pytest.raises(ValueError):
        BiWord("", "a", "b")


def test_markoff_examples():
    assert markoff_check(BiWord("ab", "", "ab"))
    bad = markoff_check(BiWord("ab", "aabb", "ab"))
    assert not bad and bad.position is not None
    assert markoff_check(BiWord(FIB, "", FIB))


def test_window_examples():
    v = window_singular_check(BiWord("ab", "aabb", "ab"))
    assert v.violation
    assert not window_singular_check(BiWord("a", "", "a")).violation
    assert not window_singular_check(Stream("", "a"), 10).violation
    assert not window_singular_check("acbcbcbcacbcbca").violation


def test_lyndon_examples():
    assert lyndon_prefix_check(Stream("", "ab"), 20) is None
    assert lyndon_prefix_check(Stream("", "ba"), 20) == 1
    assert lyndon_prefix_check(Stream("a", "ab"), 20) is None


def test_balance_examples():
    assert balance_check_biword(BiWord("ab", "", "ab"))
    report = balance_check_biword(BiWord("ab", "aabb", "ab"))
    assert not report and report.palindrome == ""
    assert balance_check_biword(BiWord(FIB, "", FIB), 20)


def _replay(x: BiWord, start: int, end: int) -> bool:
    """Rebuild the factorization from the BiWord itself and decide it on long prefixes."""
    v = x.window(start, end)
    n = 200
    u = x.window(start - n, start)[::-1]
    w = x.window(end, end + n)
    return is_reversible_factorization(u, v, w)


@given(tails, words_over("ab", 4), tails)
def test_markoff_balance_window_agree(left, center, right):
    x = BiWord(left, center, right)
    m = markoff_check(x).holds
    assert m == balance_check_biword(x).balanced
    for order in ("a<b", "b<a"):
        verdict = window_singular_check(x, alphabet=OrderedAlphabet.parse(order))
        assert m == (not verdict.violation)
        if verdict.violation:
            native = x.translate(OrderedAlphabet.parse(order))
            assert _replay(native, verdict.start, verdict.end)


@given(st.lists(st.sampled_from(["ac", "abc"]), min_size=1, max_size=30))
def test_ac_abc_concatenations(blocks):
    word = "".join(blocks)[:60]
    assert not window_singular_check(word).violation


def test_truncated_word_is_sound():
    # every violation reported on a prefix holds for every extension
    rng = random.Random(1)
    for _ in range(200):
        w = "".join(rng.choice("ab") for _ in range(rng.randint(2, 10)))
        v = window_singular_check(w)
        if not v.violation:
            continue
        for tail in ("a" * 20, "b" * 20, "ab" * 10):
            full = w + tail
            s, e = v.start, v.end
            assert is_reversible_factorization(full[:s][::-1], full[s:e], full[e:])


def test_biword_swap_and_dict():
    x = BiWord("ab", "a", "bb")
    assert x.swap("a", "b") == BiWord("ba", "b", "aa")
    assert x.to_dict() == {"left": "ab", "center": "a", "right": "bb"}
    assert x.letters() == {"a", "b"}


def test_scan_range_covers_periodic_behaviour():
    # markoff verdict is unchanged when the center absorbs extra copies of the tails
    for left, right in itertools.product(["ab", "aab", "b"], repeat=2):
        for center in ["", "a", "ab", "ba"]:
            base = markoff_check(BiWord(left, center, right)).holds
            grown = markoff_check(BiWord(left, left * 3 + center + right * 3, right)).holds
            assert base == grown
