"""Christoffel words and finite binary singular words."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .words import Word, is_balanced


@dataclass(frozen=True)
class ChristoffelSpec:
    p: int
    q: int
    power: int = 1

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise DomainError(f"invalid Christoffel counts ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"gcd({self.p}, {self.q}) != 1")
        if self.power < 1:
            raise DomainError("power must be positive")

    def word(self, a: str = "a", b: str = "b") -> Word:
        return christoffel(self.p, self.q, a, b) * self.power


def christoffel(p: int, q: int, a: str = "a", b: str = "b") -> Word:
    """Lower Christoffel word with ``p`` letters ``a`` and ``q`` letters ``b``.

    Position k carries ``a`` exactly when ``k*q mod (p+q)`` did not wrap.
    """
    if p < 0 or q < 0 or p + q < 1:
        raise DomainError(f"invalid Christoffel counts ({p}, {q})")
    if gcd(p, q) != 1:
        raise DomainError(f"gcd({p}, {q}) != 1")
    if q == 0:
        return a
    n = p + q
    return "".join(a if (k * q) % n > ((k - 1) * q) % n else b for k in range(1, n + 1))


def is_christoffel_power(word: Word, a: str = "a", b: str = "b") -> bool:
    p, q = word.count(a), word.count(b)
    if p + q != len(word) or not word:
        return False
    g = gcd(p, q)
    return word == christoffel(p // g, q // g, a, b) * g


def binary_singular_from_parikh(n_a: int, n_b: int, a: str = "a", b: str = "b") -> tuple[Word, Word]:
    """The singular pair ``(x, reverse(x))`` with ``n_a`` a's and ``n_b`` b's."""
    if n_a < 0 or n_b < 0:
        raise DomainError("counts must be nonnegative")
    if n_a == 0 and n_b == 0:
        raise DomainError("the empty Parikh vector has no singular word")
    if n_a == 0:
        x = b * n_b
    elif n_a == 1:
        x = a + b * n_b
    else:
        p, q = n_a - 1, n_b + 1
        g = gcd(p, q)
        power = christoffel(p // g, q // g, a, b) * g
        assert power.endswith(b)
        x = power[:-1] + a
    return x, x[::-1]


def is_binary_singular(x: Word, a: str = "a", b: str = "b") -> bool:
    """Closed-form test: ``x`` or its reverse is b^n, ab^n, or aya with ayb a
    power of a Christoffel word."""
    if set(x) - {a, b}:
        raise DomainError(f"{x!r} is not over {{{a}, {b}}}")
    for y in (x, x[::-1]):
        if y == b * len(y):
            return True
        if y[:1] == a and y[1:] == b * (len(y) - 1):
            return True
        if len(y) >= 2 and y[0] == a and y[-1] == a and is_christoffel_power(y[:-1] + b, a, b):
            return True
    return False


def is_bispecial_sturmian(y: Word, a: str = "a", b: str = "b") -> bool:
    return all(is_balanced(z).balanced for z in (a + y, b + y, y + a, y + b))
