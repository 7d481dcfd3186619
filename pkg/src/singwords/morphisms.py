"""Letter-inserting maps used to grow singular words.

``lambda_apply(d, x)`` writes ``d`` in front of every letter other than ``d``;
``rho_apply(d, x)`` writes it behind.  ``xi_apply`` works on the ternary
alphabet a<b<c: it lengthens every run of ``b`` by one and puts a ``b`` inside
every ``aa`` and ``cc``.  It is computed by a four-state sequential transducer.
"""

from __future__ import annotations

from .errors import AlphabetError, DomainError
from .words import OrderedAlphabet, Word


def _check_letter(d: str, alphabet: OrderedAlphabet | None) -> None:
    if alphabet is not None and d not in alphabet:
        raise AlphabetError(f"letter {d!r} not in alphabet {alphabet}")


def lambda_apply(d: str, x: Word, alphabet: OrderedAlphabet | None = None) -> Word:
    _check_letter(d, alphabet)
    return "".join(c if c == d else d + c for c in x)


def rho_apply(d: str, x: Word, alphabet: OrderedAlphabet | None = None) -> Word:
    _check_letter(d, alphabet)
    return "".join(c if c == d else c + d for c in x)


def drop_last(x: Word, letter: str) -> Word:
    """``x·letter⁻¹``; the word must end in ``letter``."""
    assert x.endswith(letter), f"{x!r} does not end in {letter!r}"
    return x[:-1]


def drop_first(x: Word, letter: str) -> Word:
    assert x.startswith(letter), f"{x!r} does not begin with {letter!r}"
    return x[1:]


def lambda_a(x: Word, a: str = "a") -> Word:
    """λ_a(x)·a, the step that adds ``|x|+1 - |x|_a`` occurrences of the least letter."""
    return lambda_apply(a, x) + a


def rho_c(x: Word, c: str = "c") -> Word:
    """ρ_c(x)·c⁻¹ for nonempty ``x``; adds occurrences of the greatest letter."""
    return drop_last(rho_apply(c, x), c)


# Transducer states: start, after a, after b, after c.
_START, _A, _B, _C = "i", "a", "b", "c"


def xi_apply(x: Word, a: str = "a", b: str = "b", c: str = "c") -> Word:
    role = {a: _A, b: _B, c: _C}
    out = []
    state = _START
    for ch in x:
        letter = role.get(ch)
        if letter is None:
            raise AlphabetError(f"letter {ch!r} not in ternary alphabet {a}<{b}<{c}")
        if letter == _B:
            out.append(b if state == _B else b + b)
        elif letter == _A:
            out.append(b + a if state == _A else a)
        else:
            out.append(b + c if state == _C else c)
        state = letter
    return "".join(out)


def xi_naive(x: Word, a: str = "a", b: str = "b", c: str = "c") -> Word:
    """Reference ξ: explicit run scanning, for cross-checking the transducer."""
    out = []
    i = 0
    while i < len(x):
        j = i
        while j < len(x) and x[j] == x[i]:
            j += 1
        run = x[i:j]
        if x[i] == b:
            out.append(run + b)
        elif x[i] in (a, c):
            out.append(b.join(run))
        else:
            raise AlphabetError(f"letter {x[i]!r} not in ternary alphabet {a}<{b}<{c}")
        i = j
    return "".join(out)


def xi_bounded(x: Word, a: str = "a", b: str = "b", c: str = "c") -> Word:
    """c⁻¹·ξ(c·x·c)·c⁻¹: ξ, plus an extra ``b`` at an end that borders ``c``."""
    image = xi_apply(c + x + c, a, b, c)
    return drop_last(drop_first(image, c), c)


def xi_image_violation(x: Word, a: str = "a", b: str = "b", c: str = "c") -> str | None:
    """Name the first reason ``x`` is not in the image of :func:`xi_bounded`."""
    if not x:
        return "empty word"
    for bad in (a + a, a + b + c, c + b + a, c + c):
        if bad in x:
            return f"factor {bad!r}"
    if x[0] == c or x[-1] == c:
        return f"{c!r} is a prefix or suffix"
    if x.startswith(b + a):
        return f"begins with {b + a!r}"
    if x.endswith(a + b):
        return f"ends with {a + b!r}"
    return None


def xi_bounded_inverse(x: Word, a: str = "a", b: str = "b", c: str = "c") -> Word:
    """The unique ``y`` with ``xi_bounded(y) == x``: one ``b`` deleted from each run."""
    bad = set(x) - {a, b, c}
    if bad:
        raise AlphabetError(f"letters {sorted(bad)!r} not in ternary alphabet")
    reason = xi_image_violation(x, a, b, c)
    if reason is not None:
        raise DomainError(f"{x!r} is not an image of xi_bounded: {reason}")
    out = []
    for i, ch in enumerate(x):
        # keep every b except the first of its run
        if ch == b and (i == 0 or x[i - 1] != b):
            continue
        out.append(ch)
    return "".join(out)
