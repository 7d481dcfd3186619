"""Regular and semi-regular continuants, with the tridiagonal permanent and
determinant as an independent cross-check."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DomainError, SizeError
from .words import OrderedAlphabet, Word

TRIDIAGONAL_CAP = 10


def _check_digits(digits: Sequence[int], minimum: int) -> tuple[int, ...]:
    digits = tuple(int(d) for d in digits)
    for d in digits:
        if d < minimum:
            raise DomainError(f"digit {d} < {minimum}")
    return digits


def continuant_regular(digits: Sequence[int]) -> int:
    """Denominator of ``[0; x1, ..., xn]``: K_n = x_n K_{n-1} + K_{n-2}, K_0 = 1."""
    prev, cur = 0, 1
    for x in _check_digits(digits, 1):
        prev, cur = cur, x * cur + prev
    return cur


def continuant_semiregular(digits: Sequence[int]) -> int:
    """K̇_n = x_n K̇_{n-1} - K̇_{n-2}, K̇_0 = 1; every digit must be at least 2."""
    prev, cur = 0, 1
    for x in _check_digits(digits, 2):
        prev, cur = cur, x * cur - prev
    return cur


def tridiagonal_matrix(digits: Sequence[int]) -> list[list[int]]:
    n = len(digits)
    return [[digits[i] if i == j else int(abs(i - j) == 1) for j in range(n)] for i in range(n)]


def _laplace(matrix: Sequence[Sequence[int]], signed: bool) -> int:
    """Row-by-row Laplace expansion, memoized on the set of unused columns.

    Exponential in the size; knows nothing about tridiagonal structure.
    """
    n = len(matrix)

    @lru_cache(maxsize=None)
    def expand(row: int, cols: tuple[int, ...]) -> int:
        if row == n:
            return 1
        total = 0
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if entry == 0:
                continue
            sign = -1 if signed and pos % 2 else 1
            total += sign * entry * expand(row + 1, cols[:pos] + cols[pos + 1 :])
        return total

    return expand(0, tuple(range(n)))


def permanent(matrix: Sequence[Sequence[int]]) -> int:
    return _laplace(matrix, signed=False)


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    return _laplace(matrix, signed=True)


def tridiagonal_check(digits: Sequence[int], cap: int = TRIDIAGONAL_CAP) -> tuple[int, int]:
    """Permanent and determinant of the tridiagonal matrix with ``digits`` on the
    diagonal and ones beside it."""
    digits = _check_digits(digits, 1)
    if len(digits) > cap:
        raise SizeError(f"{len(digits)} digits exceeds the tridiagonal cap {cap}")
    m = tridiagonal_matrix(digits)
    return permanent(m), determinant(m)


def evaluate_word(
    word: Word,
    assignment: Mapping[str, int],
    kind: str = "semi",
    strict: bool = False,
    alphabet: OrderedAlphabet | None = None,
) -> int:
    """Evaluate the continuant of ``word`` after substituting digits for letters.

    With ``strict`` the assignment must be strictly increasing in the letter
    order (the alphabet's, or code-point order).
    """
    if kind not in ("regular", "semi"):
        raise DomainError(f"unknown continuant kind {kind!r}")
    missing = set(word) - set(assignment)
    if missing:
        raise DomainError(f"letters {sorted(missing)!r} have no digit")
    if strict:
        letters = list(alphabet.letters) if alphabet is not None else sorted(assignment)
        images = [assignment[c] for c in letters if c in assignment]
        if any(a >= b for a, b in zip(images, images[1:])):
            raise DomainError("assignment is not order-preserving")
    digits = [assignment[c] for c in word]
    if kind == "regular":
        return continuant_regular(digits)
    return continuant_semiregular(digits)


def parse_digits(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise DomainError(f"cannot parse digit list {text!r}") from None
