"""The unique (up to reversal) singular word in each abelian class over a<b<c.

The construction reduces the Parikh vector until it reaches a base case,
builds the base word directly, then replays the reductions backwards with
the matching letter-inserting map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .binary import binary_singular_from_parikh
from .errors import DomainError
from .morphisms import lambda_a, rho_c, xi_bounded
from .words import Word

Vector = tuple[int, int, int]


class Rule(str, Enum):
    REDUCE_A = "reduce_a"
    REDUCE_C = "reduce_c"
    REDUCE_B = "reduce_b"
    STOP = "stop"


@dataclass(frozen=True)
class ReductionState:
    """One step of the reduction: ``rule`` maps ``vector`` to ``next_vector``."""

    vector: Vector
    rule: Rule
    next_vector: Vector | None

    @property
    def delta(self) -> int:
        n_a, _, n_c = self.vector
        return n_c - n_a + 1


def _check_vector(v) -> Vector:
    v = tuple(int(n) for n in v)
    if len(v) != 3:
        raise DomainError(f"expected three counts, got {v!r}")
    if min(v) < 0:
        raise DomainError(f"negative count in {v!r}")
    return v  # type: ignore[return-value]


def is_base_case(v: Vector) -> bool:
    n_a, n_b, n_c = v
    return n_a * n_b * n_c == 0 or n_a == n_c + 1


def reduce_vector(v: Vector) -> ReductionState:
    n_a, n_b, n_c = v = _check_vector(v)
    # stop test first: needed for termination when n_a + n_b == 1
    if is_base_case(v):
        return ReductionState(v, Rule.STOP, None)
    if n_a >= n_b + n_c + 1:
        return ReductionState(v, Rule.REDUCE_A, (n_a - n_b - n_c - 1, n_b, n_c))
    if n_c >= n_a + n_b - 1:
        return ReductionState(v, Rule.REDUCE_C, (n_a, n_b, n_c - n_a - n_b + 1))
    return ReductionState(v, Rule.REDUCE_B, (n_a, n_b - abs(n_c - n_a + 1), n_c))


def reduction_trace(v: Vector) -> list[ReductionState]:
    trace = [reduce_vector(v)]
    while trace[-1].rule is not Rule.STOP:
        state = trace[-1]
        assert sum(state.next_vector) < sum(state.vector), state
        assert min(state.next_vector) >= 0, state
        trace.append(reduce_vector(state.next_vector))
    return trace


def base_case_word(v: Vector, letters: str = "abc") -> Word:
    a, b, c = letters
    p, q, r = v = _check_vector(v)
    if not is_base_case(v):
        raise DomainError(f"{v!r} is not a base case")
    if p == 0 and q == 0 and r == 0:
        return ""
    if p * q * r == 0:
        # the two surviving letters keep their relative order
        if p == 0:
            lo, hi, n_lo, n_hi = b, c, q, r
        elif q == 0:
            lo, hi, n_lo, n_hi = a, c, p, r
        else:
            lo, hi, n_lo, n_hi = a, b, p, q
        if n_lo == 0 and n_hi == 0:
            return ""
        return binary_singular_from_parikh(n_lo, n_hi, lo, hi)[0]
    return a + b * q + (c + a) * r


def _orient(x: Word) -> tuple[Word, Word]:
    rx = x[::-1]
    if rx[:1] < x[:1]:
        return rx, x
    return x, rx


def construct_ternary(v: Vector, letters: str = "abc") -> tuple[Word, Word]:
    """The singular pair ``(x, reverse(x))`` with Parikh vector ``v``.

    ``x`` is the word the construction produces, swapped with its reverse only
    when the reverse starts with a smaller letter.
    """
    v = _check_vector(v)
    if sum(v) == 0:
        raise DomainError("the empty Parikh vector has no singular word")
    a, b, c = letters
    trace = reduction_trace(v)
    x = base_case_word(trace[-1].vector, letters)
    for state in reversed(trace[:-1]):
        if state.rule is Rule.REDUCE_A:
            x = lambda_a(x, a)
        elif state.rule is Rule.REDUCE_C:
            x = rho_c(x, c)
        else:
            x = xi_bounded(x, a, b, c)
    assert (x.count(a), x.count(b), x.count(c)) == v, (x, v)
    return _orient(x)


@dataclass(frozen=True)
class SeparatingReport:
    """Letters occurring in every length-2 factor, plus the ternary count tests.

    ``a_inequality`` is ``|x|_a >= |x|_b + |x|_c + 1`` and ``c_inequality``
    is ``|x|_c >= |x|_a + |x|_b - 1``; both are ``None`` off the ternary case.
    """

    separating: frozenset[str]
    a_inequality: bool | None = None
    c_inequality: bool | None = None


def separating_report(x: Word, letters: str | None = None) -> SeparatingReport:
    candidates = sorted(set(x)) if letters is None else list(letters)
    pairs = {x[i : i + 2] for i in range(len(x) - 1)}
    sep = frozenset(d for d in candidates if all(d in pair for pair in pairs))
    if letters is not None and len(letters) == 3:
        a, b, c = letters
        n_a, n_b, n_c = x.count(a), x.count(b), x.count(c)
        return SeparatingReport(sep, n_a >= n_b + n_c + 1, n_c >= n_a + n_b - 1)
    return SeparatingReport(sep)


def count_b_runs(x: Word, b: str = "b") -> int:
    return sum(1 for i, ch in enumerate(x) if ch == b and (i == 0 or x[i - 1] != b))


def parse_parikh(text: str, letters: str = "abc") -> Vector:
    """Parse ``"a=3,b=5,c=7"``; omitted letters count zero."""
    counts = dict.fromkeys(letters, 0)
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in counts:
            raise DomainError(f"cannot parse Parikh entry {part!r}")
        try:
            counts[key] = int(value)
        except ValueError:
            raise DomainError(f"cannot parse Parikh entry {part!r}") from None
        if counts[key] < 0:
            raise DomainError(f"negative count in {part!r}")
    return tuple(counts[c] for c in letters)  # type: ignore[return-value]
