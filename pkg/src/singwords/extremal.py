"""Brute-force extremal continuants over all arrangements of a multiset.

This module is the trusted oracle for the constructive results, so it does
nothing clever: it walks every arrangement once per reversal pair and keeps
every arrangement that attains the best value.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from sympy.utilities.iterables import multiset_permutations

from .continuants import continuant_regular, continuant_semiregular
from .errors import DomainError, SizeError
from .ternary import construct_ternary
from .words import OrderedAlphabet, Word, is_singular

SEARCH_CAP = 12
OBJECTIVES = ("regular-max", "regular-min", "semi-max", "semi-min")

Arrangement = tuple[int, ...]


def as_multiset(digits: Mapping[int, int] | Iterable[int]) -> dict[int, int]:
    """Normalize either a ``{digit: multiplicity}`` map or a flat digit list."""
    if isinstance(digits, Mapping):
        counts = {int(d): int(n) for d, n in digits.items() if n}
    else:
        counts = dict(Counter(int(d) for d in digits))
    if any(n < 0 for n in counts.values()):
        raise DomainError("negative multiplicity")
    if any(d < 1 for d in counts):
        raise DomainError("digits must be positive")
    return dict(sorted(counts.items()))


def canonical(w: Sequence) -> tuple:
    """Reversal-class representative: the smaller of ``w`` and its reverse
    in ordinary tuple order."""
    w = tuple(w)
    return min(w, w[::-1])


def _expand(m: Mapping[int, int]) -> list[int]:
    return [d for d, n in sorted(m.items()) for _ in range(n)]


def arrangement_count(m: Mapping[int, int]) -> int:
    """Distinct arrangements up to reversal: (multinomial + palindromes) / 2."""
    m = as_multiset(m)
    total = factorial(sum(m.values())) // prod(factorial(n) for n in m.values())
    odd = [d for d, n in m.items() if n % 2]
    if len(odd) > 1:
        pal = 0
    else:
        half = {d: n // 2 for d, n in m.items()}
        pal = factorial(sum(half.values())) // prod(factorial(n) for n in half.values())
    return (total + pal) // 2


def enumerate_arrangements(m: Mapping[int, int] | Iterable[int]) -> Iterator[Arrangement]:
    """Every arrangement of the multiset, one per reversal pair."""
    items = _expand(as_multiset(m))
    if not items:
        yield ()
        return
    for perm in multiset_permutations(items):
        w = tuple(perm)
        if w <= w[::-1]:
            yield w


@dataclass(frozen=True)
class ExtremalResult:
    objective: str
    value: int
    argext: tuple[Arrangement, ...]
    unique_up_to_reversal: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "unique_up_to_reversal", len(self.argext) == 1)

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "value": str(self.value),
            "arrangements": [list(w) for w in self.argext],
            "unique": self.unique_up_to_reversal,
        }


def _evaluator(objective: str):
    if objective not in OBJECTIVES:
        raise DomainError(f"unknown objective {objective!r}; choose from {OBJECTIVES}")
    kind, direction = objective.split("-")
    fn = continuant_semiregular if kind == "semi" else continuant_regular
    return fn, direction == "max"


def _search_branch(args) -> tuple[int | None, set[Arrangement]]:
    """Best value and attaining arrangements among those starting with ``first``."""
    m, first, objective = args
    fn, maximize = _evaluator(objective)
    rest = dict(m)
    rest[first] -= 1
    items = _expand(rest)
    best, arg = None, set()
    perms = multiset_permutations(items) if items else [[]]
    for perm in perms:
        w = (first, *perm)
        if w > w[::-1]:
            continue
        val = fn(w)
        if best is None or (val > best if maximize else val < best):
            best, arg = val, {w}
        elif val == best:
            arg.add(w)
    return best, arg


def _merge(results: Iterable[tuple[int | None, set]], maximize: bool) -> tuple[int, set]:
    best, arg = None, set()
    for val, witnesses in results:
        if val is None:
            continue
        if best is None or (val > best if maximize else val < best):
            best, arg = val, set(witnesses)
        elif val == best:
            arg |= witnesses
    return best, arg


def brute_extremal(
    m: Mapping[int, int] | Iterable[int],
    objective: str = "semi-max",
    cap: int = SEARCH_CAP,
    workers: int = 1,
) -> ExtremalResult:
    """Exhaustive extremum of a continuant over all arrangements of ``m``.

    The search space is split by first digit; each branch returns its own
    best value and witnesses and the merge keeps every tie, so the result
    does not depend on ``workers``.
    """
    m = as_multiset(m)
    _, maximize = _evaluator(objective)
    size = sum(m.values())
    if size < 1:
        raise DomainError("empty multiset")
    if size > cap:
        raise SizeError(f"multiset of size {size} exceeds search cap {cap}")
    if objective.startswith("semi") and min(m) < 2:
        raise DomainError("semi-regular objectives need every digit >= 2")
    branches = [(m, d, objective) for d in m]
    if workers > 1 and len(branches) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_branch, branches))
    else:
        results = [_search_branch(b) for b in branches]
    best, arg = _merge(results, maximize)
    return ExtremalResult(objective, best, tuple(sorted(arg)))


def regular_max_pattern(m: Mapping[int, int] | Iterable[int]) -> Arrangement:
    """Closed-form maximizer of the regular continuant.

    With distinct digits a_1 < ... < a_k of multiplicities n_i and
    L_i = a_i^(n_i - 1), the arrangement reads
    a_k L_{k-1} a_{k-2} L_{k-3} ... a_1^(n_1) ... L_{k-2} a_{k-1} L_k.
    """
    m = as_multiset(m)
    digits = sorted(m)
    k = len(digits)
    if k == 0:
        raise DomainError("empty multiset")
    left, right = [], []
    for j in range(k, 1, -1):
        d, n = digits[j - 1], m[digits[j - 1]]
        if (k - j) % 2 == 0:
            left += [d]
            right = [d] * (n - 1) + right
        else:
            left += [d] * (n - 1)
            right = [d] + right
    return tuple(left + [digits[0]] * m[digits[0]] + right)


def word_to_digits(word: Word, assignment: Mapping[str, int]) -> Arrangement:
    return tuple(assignment[c] for c in word)


@dataclass
class ConjectureReport:
    max_total: int
    assignment: dict[str, int]
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "max_total": self.max_total,
            "assignment": self.assignment,
            "checked": self.checked,
            "violations": self.violations,
        }


def parikh_vectors(max_total: int, k: int = 3, min_total: int = 1) -> Iterator[tuple[int, ...]]:
    for v in product(range(max_total + 1), repeat=k):
        if min_total <= sum(v) <= max_total:
            yield v


def _check_vector(args) -> dict | None:
    v, assignment, letters = args
    multiset = {assignment[c]: n for c, n in zip(letters, v) if n}
    result = brute_extremal(multiset, "semi-max", cap=max(SEARCH_CAP, sum(v)))
    x, _ = construct_ternary(v, letters)
    expected = canonical(word_to_digits(x, assignment))
    if result.argext != (expected,):
        return {
            "vector": list(v),
            "expected": list(expected),
            "argmax": [list(w) for w in result.argext],
            "value": str(result.value),
        }
    return None


def verify_ternary_conjecture(
    max_total: int,
    assignment: Mapping[str, int] | Sequence[int] = (2, 3, 4),
    letters: str = "abc",
    workers: int = 1,
) -> ConjectureReport:
    """Check, for every ternary Parikh vector of total at most ``max_total``,
    that the semi-regular maximizer is unique up to reversal and equals the
    constructed singular word under ``assignment``."""
    if not isinstance(assignment, Mapping):
        assignment = dict(zip(letters, assignment))
    assignment = {c: int(assignment[c]) for c in letters}
    images = [assignment[c] for c in letters]
    if min(images) < 2 or any(x >= y for x, y in zip(images, images[1:])):
        raise DomainError("assignment must be strictly increasing into integers >= 2")
    report = ConjectureReport(max_total, assignment)
    jobs = [(v, assignment, letters) for v in parikh_vectors(max_total)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_check_vector, jobs, chunksize=8))
    else:
        outcomes = [_check_vector(j) for j in jobs]
    report.checked = len(jobs)
    report.violations = [o for o in outcomes if o is not None]
    return report


def letter_arrangements(counts: Mapping[str, int]) -> Iterator[Word]:
    """Every word with the given letter counts, one per reversal pair."""
    items = [c for c, n in counts.items() for _ in range(n)]
    for perm in multiset_permutations(sorted(items)):
        w = "".join(perm)
        if w <= w[::-1]:
            yield w


def singular_class(counts: Mapping[str, int], alphabet: OrderedAlphabet | None = None) -> list[Word]:
    """Singular words of an abelian class, one per reversal pair."""
    return sorted(w for w in letter_arrangements(counts) if is_singular(w, alphabet))


@dataclass(frozen=True)
class CounterexampleReport:
    """Singular words in a four-letter class versus the brute-force maximizer."""

    singular_words: tuple[Word, ...]
    values: dict[Word, int]
    maximizers: tuple[Word, ...]
    result: ExtremalResult


def four_letter_check(
    counts: Mapping[str, int],
    assignment: Mapping[str, int],
) -> CounterexampleReport:
    sing = tuple(singular_class(counts))
    values = {w: continuant_semiregular(word_to_digits(w, assignment)) for w in sing}
    digits = {assignment[c]: n for c, n in counts.items() if n}
    result = brute_extremal(digits, "semi-max")
    winners = {canonical(w) for w in result.argext}
    maximizers = tuple(w for w in sing if canonical(word_to_digits(w, assignment)) in winners)
    return CounterexampleReport(sing, values, maximizers, result)


def parse_multiset(text: str) -> dict[int, int]:
    try:
        return as_multiset(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise DomainError(f"cannot parse multiset {text!r}") from None
