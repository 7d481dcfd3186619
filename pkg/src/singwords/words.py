"""Finite words over ordered alphabets, the prefix-reversed lexicographic order,
Parikh vectors, balance, and the singular/reversible classifier.

Words are plain Python strings, one character per letter.  Unless an
:class:`OrderedAlphabet` is supplied, letters are ordered by code point, so
``"a" < "b" < "c"`` and ``"1" < "2" < "3"`` need no alphabet object.  Passing an
alphabet both validates the letters and imposes its declared order.

The order used throughout differs from Python's string order in one respect:
a proper prefix is *greater* than every longer word that extends it.  In
particular the empty word is the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from typing import Iterator, Sequence

from .errors import AlphabetError

Word = str


@dataclass(frozen=True)
class OrderedAlphabet:
    """A finite alphabet listed in strictly increasing order."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise AlphabetError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"duplicate letters in alphabet {letters!r}")
        for letter in letters:
            if not isinstance(letter, str) or len(letter) != 1:
                raise AlphabetError(f"letters must be single characters, got {letter!r}")

    @classmethod
    def parse(cls, text: str) -> "OrderedAlphabet":
        """Parse ``"a<b<c"`` (or the comma-joined form ``"a,b,c"``)."""
        sep = "<" if "<" in text else ","
        return cls(tuple(part.strip() for part in text.split(sep) if part.strip()))

    @classmethod
    def of(cls, letters: str) -> "OrderedAlphabet":
        """``OrderedAlphabet.of("abc")`` is the alphabet a<b<c."""
        return cls(tuple(letters))

    def __str__(self) -> str:
        return "<".join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self._ranks

    @cached_property
    def _ranks(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.letters)}

    def rank(self, letter: str) -> int:
        try:
            return self._ranks[letter]
        except KeyError:
            raise AlphabetError(f"letter {letter!r} not in alphabet {self}") from None

    def validate(self, word: Word) -> Word:
        bad = set(word) - set(self.letters)
        if bad:
            raise AlphabetError(f"letters {sorted(bad)!r} of {word!r} not in alphabet {self}")
        return word

    def native(self, word: Word) -> Word:
        """Rewrite ``word`` so that code-point order matches this alphabet's order."""
        self.validate(word)
        if list(self.letters) == sorted(self.letters):
            return word
        table = {ord(c): chr(0x100 + i) for i, c in enumerate(self.letters)}
        return word.translate(table)

    def reversed_order(self) -> "OrderedAlphabet":
        return OrderedAlphabet(self.letters[::-1])


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def less(x: Sequence, y: Sequence) -> bool:
    """``x < y`` in the prefix-reversed lexicographic order (native letter order).

    Works for strings and for tuples of comparable items.
    """
    m = min(len(x), len(y))
    px, py = x[:m], y[:m]
    if px != py:
        return px < py
    return len(x) > len(y)


def compare(x: Sequence, y: Sequence) -> Ordering:
    if x == y:
        return Ordering.EQUAL
    return Ordering.LESS if less(x, y) else Ordering.GREATER


def lex_compare(x, y, alphabet: OrderedAlphabet | None = None) -> Ordering:
    """Compare two words (or eventually periodic streams) in the word order.

    If either operand is a :class:`~singwords.streams.Stream` the comparison is
    delegated to :func:`singwords.streams.stream_compare`, which is exact.
    If both operands carry an ``alphabet`` attribute they must agree.
    """
    ax, ay = getattr(x, "alphabet", None), getattr(y, "alphabet", None)
    if ax is not None and ay is not None and ax != ay:
        raise AlphabetError(f"cannot compare words over {ax} and {ay}")
    if not isinstance(x, str) or not isinstance(y, str):
        from .streams import stream_compare

        return stream_compare(x, y, alphabet=alphabet)
    if alphabet is not None:
        x, y = alphabet.native(x), alphabet.native(y)
    return compare(x, y)


def reverse(x: Word) -> Word:
    return x[::-1]


def parikh(x: Word, alphabet: OrderedAlphabet | None = None) -> dict[str, int]:
    """Letter counts, listed in alphabet order (zeros included when an alphabet is given)."""
    if alphabet is None:
        letters = sorted(set(x))
    else:
        alphabet.validate(x)
        letters = list(alphabet.letters)
    return {c: x.count(c) for c in letters}


@dataclass(frozen=True)
class Factorization:
    """A split ``x = reverse(u) + v + w`` with ``v`` nonempty."""

    u: Word
    v: Word
    w: Word

    def __post_init__(self) -> None:
        if not self.v:
            raise ValueError("the middle factor v must be nonempty")

    def word(self) -> Word:
        return self.u[::-1] + self.v + self.w

    def __str__(self) -> str:
        return f"({self.u[::-1]})({self.v})({self.w})"

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w}


class Verdict(str, Enum):
    SINGULAR = "singular"
    REVERSIBLE = "reversible"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: Factorization | None = None

    @property
    def singular(self) -> bool:
        return self.verdict is Verdict.SINGULAR

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def is_reversible_factorization(u: Sequence, v: Sequence, w: Sequence) -> bool:
    """True iff ``reverse(u)·v·w`` is a reversible factorization (native order)."""
    rv = v[::-1]
    if v == rv or u == w:
        return False
    if less(v, rv):
        return less(u, w)
    return less(w, u)


def classify_singular(x: Word, alphabet: OrderedAlphabet | None = None) -> Classification:
    """Exhaustive check of every factorization ``x = reverse(u)·v·w``.

    Returns a reversible witness minimizing ``(|v|, start)`` when one exists.
    """
    nx = x if alphabet is None else alphabet.native(x)
    n = len(nx)
    best = None
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if best is not None and (j - i, i) >= best:
                break
            if is_reversible_factorization(nx[:i][::-1], nx[i:j], nx[j:]):
                best = (j - i, i)
    if best is None:
        return Classification(Verdict.SINGULAR)
    length, i = best
    j = i + length
    return Classification(Verdict.REVERSIBLE, Factorization(x[:i][::-1], x[i:j], x[j:]))


def classify_singular_fast(x: Word, alphabet: OrderedAlphabet | None = None) -> Classification:
    """Same verdict as :func:`classify_singular`, inspecting only middles whose
    first and last letters differ, shortest first."""
    nx = x if alphabet is None else alphabet.native(x)
    n = len(nx)
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length
            if nx[i] != nx[j - 1] and is_reversible_factorization(nx[:i][::-1], nx[i:j], nx[j:]):
                return Classification(Verdict.REVERSIBLE, Factorization(x[:i][::-1], x[i:j], x[j:]))
    return Classification(Verdict.SINGULAR)


def is_singular(x: Word, alphabet: OrderedAlphabet | None = None) -> bool:
    return classify_singular_fast(x, alphabet).singular


def factors(x: Sequence, length: int) -> set:
    return {x[i : i + length] for i in range(len(x) - length + 1)}


def all_factors(x: Sequence, max_len: int | None = None) -> set:
    top = len(x) if max_len is None else min(max_len, len(x))
    out = set()
    for m in range(1, top + 1):
        out |= factors(x, m)
    return out


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of a balance test.

    On failure ``pair`` holds two equal-length factors whose counts of
    ``letter`` differ by ``counts[0] - counts[1] >= 2``.  For two-letter
    words ``palindrome`` is the shortest palindrome ``z`` with both ``aza``
    and ``bzb`` occurring, if there is one.
    """

    balanced: bool
    pair: tuple[Word, Word] | None = None
    letter: str | None = None
    counts: tuple[int, int] | None = None
    palindrome: Word | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _palindrome_witness(x: Word) -> Word | None:
    seen: dict[Word, set[str]] = {}
    n = len(x)
    best = None
    for i in range(n):
        for j in range(i + 2, n + 1):
            if x[i] != x[j - 1]:
                continue
            z = x[i + 1 : j - 1]
            if z != z[::-1]:
                continue
            ends = seen.setdefault(z, set())
            ends.add(x[i])
            if len(ends) >= 2 and (best is None or (len(z), z) < (len(best), best)):
                best = z
    return best


def is_balanced(x: Word, alphabet: OrderedAlphabet | None = None) -> BalanceReport:
    if alphabet is not None:
        alphabet.validate(x)
    letters = sorted(set(x)) if alphabet is None else list(alphabet.letters)
    n = len(x)
    prefix = {c: [0] * (n + 1) for c in letters}
    for i, ch in enumerate(x):
        for c in letters:
            prefix[c][i + 1] = prefix[c][i] + (ch == c)
    for m in range(1, n):
        for c in letters:
            p = prefix[c]
            counts = [p[i + m] - p[i] for i in range(n - m + 1)]
            hi, lo = max(counts), min(counts)
            if hi - lo > 1:
                ih, il = counts.index(hi), counts.index(lo)
                pal = _palindrome_witness(x) if len(set(x)) == 2 else None
                return BalanceReport(False, (x[ih : ih + m], x[il : il + m]), c, (hi, lo), pal)
    return BalanceReport(True)
