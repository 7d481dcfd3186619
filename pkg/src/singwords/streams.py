"""Eventually periodic infinite words.

A :class:`Stream` is ``preperiod · period^ω``.  A :class:`BiWord` is
``… ℓℓℓ · center · rrr …`` with coordinates fixed as follows::

    position:  … -3 -2 -1 | 0 1 … |c|-1 | |c| |c|+1 …
    letter:    …  ℓ  ℓ  ℓ | center      | r   r    …

so position -1 holds the *last* letter of ℓ and position ``|center|`` the
first letter of r.  Comparisons between eventually periodic words are exact:
two streams that agree on ``max(preperiods) + lcm(periods)`` letters agree
forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .words import (
    Factorization,
    OrderedAlphabet,
    Ordering,
    Word,
    is_balanced,
    BalanceReport,
)


@dataclass(frozen=True)
class Stream:
    preperiod: Word
    period: Word

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("a stream needs a nonempty period")

    def letter(self, i: int) -> str:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Word:
        p = self.preperiod[:n]
        if len(p) == n:
            return p
        rest = n - len(p)
        reps = -(-rest // len(self.period))
        return p + (self.period * reps)[:rest]

    def shift(self, i: int) -> "Stream":
        if i <= len(self.preperiod):
            return Stream(self.preperiod[i:], self.period)
        k = (i - len(self.preperiod)) % len(self.period)
        return Stream("", self.period[k:] + self.period[:k])

    def translate(self, alphabet: OrderedAlphabet) -> "Stream":
        return Stream(alphabet.native(self.preperiod), alphabet.native(self.period))

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})^ω"


def _horizon(s: Stream, t: Stream) -> int:
    return max(len(s.preperiod), len(t.preperiod)) + lcm(len(s.period), len(t.period))


def first_difference(s: Stream | Word, t: Stream | Word) -> int | None:
    """Index of the first differing letter, or ``None`` when one operand is a
    prefix of (or equal to) the other."""
    if isinstance(s, Stream) and isinstance(t, Stream):
        n = _horizon(s, t)
    elif isinstance(s, Stream):
        n = len(t)
    elif isinstance(t, Stream):
        n = len(s)
    else:
        n = min(len(s), len(t))
    ps = s.prefix(n) if isinstance(s, Stream) else s[:n]
    pt = t.prefix(n) if isinstance(t, Stream) else t[:n]
    if ps == pt:
        return None
    return next(i for i in range(n) if ps[i] != pt[i])


def _less(s: Stream | Word, t: Stream | Word) -> bool | None:
    """Word order between words and streams; ``None`` when equal."""
    i = first_difference(s, t)
    if i is not None:
        ls = s.letter(i) if isinstance(s, Stream) else s[i]
        lt = t.letter(i) if isinstance(t, Stream) else t[i]
        return ls < lt
    s_inf, t_inf = isinstance(s, Stream), isinstance(t, Stream)
    if s_inf and t_inf:
        return None
    if not s_inf and not t_inf:
        if len(s) == len(t):
            return None
        return len(s) > len(t)
    # a finite word that is a prefix of a stream is greater than it
    return s_inf


def stream_compare(s: Stream | Word, t: Stream | Word, alphabet: OrderedAlphabet | None = None) -> Ordering:
    if alphabet is not None:
        s = s.translate(alphabet) if isinstance(s, Stream) else alphabet.native(s)
        t = t.translate(alphabet) if isinstance(t, Stream) else alphabet.native(t)
    r = _less(s, t)
    if r is None:
        return Ordering.EQUAL
    return Ordering.LESS if r else Ordering.GREATER


@dataclass(frozen=True)
class BiWord:
    left: Word
    center: Word
    right: Word

    def __post_init__(self) -> None:
        if not self.left or not self.right:
            raise ValueError("both tail periods must be nonempty")

    def letter(self, i: int) -> str:
        c = len(self.center)
        if i < 0:
            return self.left[i % len(self.left)]
        if i < c:
            return self.center[i]
        return self.right[(i - c) % len(self.right)]

    def window(self, lo: int, hi: int) -> Word:
        """Letters at positions ``lo <= i < hi``."""
        return "".join(self.letter(i) for i in range(lo, hi))

    def forward(self, j: int) -> Stream:
        """The one-sided word x_j x_{j+1} …"""
        c = len(self.center)
        if j < c:
            return Stream(self.window(j, c), self.right)
        return Stream("", self.window(j, j + len(self.right)))

    def backward(self, i: int) -> Stream:
        """The one-sided word x_{i-1} x_{i-2} …, read leftwards."""
        if i > 0:
            return Stream(self.window(0, i)[::-1], self.left[::-1])
        return Stream("", self.window(i - len(self.left), i)[::-1])

    def translate(self, alphabet: OrderedAlphabet) -> "BiWord":
        return BiWord(alphabet.native(self.left), alphabet.native(self.center), alphabet.native(self.right))

    def swap(self, a: str, b: str) -> "BiWord":
        table = str.maketrans({a: b, b: a})
        return BiWord(self.left.translate(table), self.center.translate(table), self.right.translate(table))

    def letters(self) -> set[str]:
        return set(self.left) | set(self.center) | set(self.right)

    def scan_range(self) -> range:
        """Positions p whose behaviour represents every position of the word:
        beyond this range the outward streams repeat with the tail period."""
        return range(-(2 * len(self.left) + 3), len(self.center) + 2 * len(self.right) + 3)

    def to_dict(self) -> dict:
        return {"left": self.left, "center": self.center, "right": self.right}

    def __str__(self) -> str:
        return f"…({self.left})·{self.center}·({self.right})…"


@dataclass(frozen=True)
class MarkoffResult:
    holds: bool
    position: int | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "position": self.position, "index": self.index}


def markoff_check(x: BiWord, a: str = "a", b: str = "b") -> MarkoffResult:
    """Markoff property (M) on a binary bi-infinite word.

    At every occurrence of ``a'b'`` with ``{a', b'} = {a, b}``, the word read
    leftwards from ``a'`` (call it u) and rightwards from ``b'`` (w) must agree,
    or first differ with ``u_i = b'`` and ``w_i = a'``.  Occurrences outside
    :meth:`BiWord.scan_range` repeat a checked case.
    """
    for p in x.scan_range():
        first, second = x.letter(p), x.letter(p + 1)
        if first == second or {first, second} != {a, b}:
            continue
        u, w = x.backward(p), x.forward(p + 2)
        i = first_difference(u, w)
        if i is None:
            continue
        if not (u.letter(i) == second and w.letter(i) == first):
            return MarkoffResult(False, p, i)
    return MarkoffResult(True)


@dataclass(frozen=True)
class WindowVerdict:
    """Either a reversible factorization whose comparisons were decided from
    available letters, or the radius up to which none was found."""

    violation: bool
    radius: int
    start: int | None = None
    end: int | None = None
    witness: Factorization | None = None

    def to_dict(self) -> dict:
        out = {"verdict": "definite_violation" if self.violation else "no_violation_within", "radius": self.radius}
        if self.violation:
            out.update(start=self.start, end=self.end, witness=self.witness.to_dict())
        return out


def _decided_less(s, t) -> bool | None:
    """Order between two operands where a finite ``str`` stands for a truncated
    infinite word: returns ``None`` when truncation leaves the order open."""
    i = first_difference(s, t)
    if i is None:
        return None
    ls = s.letter(i) if isinstance(s, Stream) else s[i]
    lt = t.letter(i) if isinstance(t, Stream) else t[i]
    return ls < lt


def _describe(s, n: int) -> Word:
    return s.prefix(n) if isinstance(s, Stream) else s


def window_singular_check(
    x: BiWord | Stream | Word,
    radius: int | None = None,
    alphabet: OrderedAlphabet | None = None,
) -> WindowVerdict:
    """Search for a reversible factorization with the middle factor inside a window.

    * ``BiWord``: middles inside positions [-radius, radius); both outward
      words are exact streams.
    * ``Stream``: middles inside [0, radius); the left part is finite.
    * ``str``: treated as a prefix of an unknown one-sided infinite word, so the
      left part is exact and the right part truncated; a comparison that the
      truncation leaves open never produces a violation.
    """
    if alphabet is not None:
        x = x.translate(alphabet) if not isinstance(x, str) else alphabet.native(x)
    if isinstance(x, BiWord):
        r = radius if radius is not None else len(x.center) + 2 * lcm(len(x.left), len(x.right)) + 4
        lo, hi = -r, r
        get = x.letter
    elif isinstance(x, Stream):
        r = radius if radius is not None else len(x.preperiod) + 2 * len(x.period)
        lo, hi = 0, r
        get = x.letter
    else:
        r = len(x) if radius is None else min(radius, len(x))
        lo, hi = 0, r
        get = x.__getitem__
    letters = [get(i) for i in range(lo, hi)]
    for length in range(2, hi - lo + 1):
        for s in range(lo, hi - length + 1):
            e = s + length
            if letters[s - lo] == letters[e - 1 - lo]:
                continue
            v = "".join(letters[s - lo : e - lo])
            v_less = v < v[::-1]
            if isinstance(x, BiWord):
                u, w = x.backward(s), x.forward(e)
            elif isinstance(x, Stream):
                u, w = x.prefix(s)[::-1], x.shift(e)
            else:
                u, w = x[:s][::-1], x[e:]
            if isinstance(x, str):
                # u is exact, w is a truncation of the true right part
                if w == u[: len(w)]:
                    continue  # w's continuation is unknown
                if u == w[: len(u)]:
                    w_less = True  # u is a proper prefix of the true w
                else:
                    w_less = _decided_less(w, u)
            else:
                order = _less(w, u)
                if order is None:
                    continue
                w_less = order
            if w_less != v_less:
                n = len(v) + 2 * r
                return WindowVerdict(True, r, s, e, Factorization(_describe(u, n), v, _describe(w, n)))
    return WindowVerdict(False, r)


def lyndon_prefix_check(x: Stream, horizon: int) -> int | None:
    """First shift ``i`` in 1..horizon with ``shift^i(x) < x``, or ``None``."""
    for i in range(1, horizon + 1):
        if _less(x.shift(i), x):
            return i
    return None


def balance_bound(x: BiWord) -> int:
    return len(x.center) + 2 * lcm(len(x.left), len(x.right)) + 4


def balance_check_biword(x: BiWord, max_len: int | None = None) -> BalanceReport:
    """Balance of all factors of length at most ``max_len``.

    Every such factor occurs inside the returned window, which covers the
    center, one full period on each side, and ``max_len`` letters of slack.
    """
    n = balance_bound(x) if max_len is None else max_len
    lo = -(len(x.left) + n)
    hi = len(x.center) + len(x.right) + n
    window = x.window(lo, hi)
    # check only factors up to n: slide every length separately
    for m in range(1, n + 1):
        chunk_report = _balanced_at_length(window, m)
        if chunk_report is not None:
            return chunk_report
    return BalanceReport(True)


def _balanced_at_length(window: Word, m: int) -> BalanceReport | None:
    letters = sorted(set(window))
    for c in letters:
        counts = [window[i : i + m].count(c) for i in range(len(window) - m + 1)]
        hi, lo = max(counts), min(counts)
        if hi - lo > 1:
            ih, il = counts.index(hi), counts.index(lo)
            full = is_balanced(window)
            return BalanceReport(
                False, (window[ih : ih + m], window[il : il + m]), c, (hi, lo), full.palindrome
            )
    return None
