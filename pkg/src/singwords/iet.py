"""Symmetric interval exchange transformations over exact rationals, their
natural codings, and finite-scale checks on factor languages.

Letters of the coding alphabet are the characters ``"1"`` … ``"k"`` (k ≤ 9),
so code-point order is the integer order.  Every language check here runs on
a finite set of factors collected from a finite window; results are evidence
at that scale, not proofs about the infinite language.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ScopeError
from .words import Word


@dataclass(frozen=True)
class IETSpec:
    """Interval lengths of a symmetric k-IET; the permutation is i -> k+1-i."""

    lengths: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        lengths = tuple(Fraction(a) for a in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if len(lengths) < 2:
            raise DomainError("need at least two intervals")
        if len(lengths) > 9:
            raise DomainError("codings use the letters 1..9, so k <= 9")
        if any(not 0 < a < 1 for a in lengths):
            raise DomainError("every length must lie in (0, 1)")
        if sum(lengths) != 1:
            raise DomainError(f"lengths sum to {sum(lengths)}, not 1")

    @classmethod
    def parse(cls, text: str) -> "IETSpec":
        return cls(tuple(parse_rational(p) for p in text.split(",") if p.strip()))

    @property
    def k(self) -> int:
        return len(self.lengths)

    def sigma(self, i: int) -> int:
        return self.k + 1 - i

    @property
    def gammas(self) -> tuple[Fraction, ...]:
        """Discontinuities of the map: partial sums of the first k-1 lengths."""
        return tuple(accumulate(self.lengths))[:-1]

    @property
    def betas(self) -> tuple[Fraction, ...]:
        """Discontinuities of the inverse: partial sums from the right."""
        return tuple(accumulate(reversed(self.lengths)))[:-1]

    def interval(self, x: Fraction) -> int:
        """Index i (1-based) with x in [γ_{i-1}, γ_i)."""
        x = Fraction(x)
        if not 0 <= x < 1:
            raise DomainError(f"{x} is outside [0, 1)")
        for i, g in enumerate(self.gammas, start=1):
            if x < g:
                return i
        return self.k

    def to_dict(self) -> dict:
        return {"lengths": [str(a) for a in self.lengths], "k": self.k}


@dataclass(frozen=True)
class Discontinuities:
    gammas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]


def discontinuities(spec: IETSpec) -> Discontinuities:
    return Discontinuities(spec.gammas, spec.betas)


def iet_apply(spec: IETSpec, x) -> Fraction:
    """Translate x ∈ I_i by (lengths after i) − (lengths before i)."""
    x = Fraction(x)
    i = spec.interval(x)
    a = spec.lengths
    return x + sum(a[i:], Fraction(0)) - sum(a[: i - 1], Fraction(0))


def iet_inverse_apply(spec: IETSpec, y) -> Fraction:
    y = Fraction(y)
    if not 0 <= y < 1:
        raise DomainError(f"{y} is outside [0, 1)")
    a = spec.lengths
    # image of I_i is [sum_{j>i} a_j, sum_{j>=i} a_j), images of I_k .. I_1 in order
    lo = Fraction(0)
    for i in range(spec.k, 0, -1):
        hi = lo + a[i - 1]
        if y < hi:
            return y - lo + sum(a[: i - 1], Fraction(0))
        lo = hi
    raise AssertionError("unreachable: images cover [0, 1)")


@dataclass(frozen=True)
class CodingWindow:
    """Letters x_lo … x_hi of a natural coding; ``word[n - origin]`` is x_n."""

    word: Word
    origin: int

    def at(self, n: int) -> str:
        return self.word[n - self.origin]


def natural_coding(spec: IETSpec, point, lo: int, hi: int) -> CodingWindow:
    if lo > 0 or hi < 0:
        raise DomainError("the window must contain index 0")
    point = Fraction(point)
    forward = []
    x = point
    for _ in range(hi + 1):
        forward.append(str(spec.interval(x)))
        x = iet_apply(spec, x)
    backward = []
    x = point
    for _ in range(-lo):
        x = iet_inverse_apply(spec, x)
        backward.append(str(spec.interval(x)))
    return CodingWindow("".join(reversed(backward)) + "".join(forward), lo)


def rotation_coding(alpha, point, n: int) -> Word:
    """Coding of the rotation y -> y + alpha mod 1 by the partition
    [0, 1-alpha) -> "1", [1-alpha, 1) -> "2"."""
    alpha, y = Fraction(alpha), Fraction(point)
    out = []
    for _ in range(n):
        out.append("1" if y < 1 - alpha else "2")
        y = (y + alpha) % 1
    return "".join(out)


def fibonacci_word(length: int) -> Word:
    """Prefix of the fixed point of 0 -> 01, 1 -> 0."""
    return morphic_word({"0": "01", "1": "0"}, "0", length, iterate=True)


def morphic_word(
    rules: Mapping[str, str],
    seed: Word,
    length: int,
    iterate: bool = False,
) -> Word:
    """Prefix of length ``length`` of the image of ``seed`` under ``rules``.

    With ``iterate`` the rules are applied repeatedly until the prefix is
    long enough (the seed's first letter must map to a word beginning with
    itself for this to converge to a fixed point).
    """
    if any(not img for img in rules.values()):
        raise DomainError("rules must be nonerasing")
    if not iterate:
        out = []
        total = 0
        for ch in seed:
            img = rules.get(ch, ch)
            out.append(img)
            total += len(img)
            if total >= length:
                break
        word = "".join(out)
        if len(word) < length:
            raise DomainError(f"seed too short to produce {length} letters")
        return word[:length]
    word = seed
    while len(word) < length:
        nxt = "".join(rules.get(ch, ch) for ch in word)
        if len(nxt) <= len(word):
            raise DomainError("iteration does not grow")
        word = nxt
    return word[:length]


@dataclass(frozen=True)
class FactorLanguage:
    """Factors of lengths 1..max_len of a finite window (plus that window)."""

    factors: frozenset[Word]
    max_len: int
    source: Word = ""
    non_extendable: frozenset[Word] = frozenset()

    @property
    def letters(self) -> list[str]:
        return sorted(w for w in self.factors if len(w) == 1)

    @property
    def extendable(self) -> bool:
        return not self.non_extendable

    def __contains__(self, w: object) -> bool:
        return w == "" or w in self.factors

    def of_length(self, n: int) -> list[Word]:
        return sorted(w for w in self.factors if len(w) == n)


def collect_language(w: Word, max_len: int) -> FactorLanguage:
    if max_len < 1:
        raise DomainError("max_len must be positive")
    if len(w) < 2 * max_len:
        raise ScopeError(f"window of length {len(w)} is shorter than 2*max_len = {2 * max_len}")
    facts = {w[i : i + m] for m in range(1, max_len + 1) for i in range(len(w) - m + 1)}
    stuck = set()
    letters = {c for c in facts if len(c) == 1}
    for f in facts:
        if len(f) >= max_len:
            continue
        if not any(c + f in facts for c in letters) or not any(f + c in facts for c in letters):
            stuck.add(f)
    return FactorLanguage(frozenset(facts), max_len, w, frozenset(stuck))


def language_from_words(words: Iterable[Word], max_len: int | None = None) -> FactorLanguage:
    """A language given directly as a set of words (closed under factors here)."""
    words = list(words)
    top = max_len if max_len is not None else max((len(x) for x in words), default=1)
    facts = {x[i : i + m] for x in words for m in range(1, top + 1) for i in range(len(x) - m + 1)}
    return FactorLanguage(frozenset(facts), top)


@dataclass(frozen=True)
class SOCViolation:
    s: Word
    a: str
    b: str
    c: str
    d: str

    def to_dict(self) -> dict:
        return {"s": self.s, "a": self.a, "b": self.b, "c": self.c, "d": self.d}


def soc_check(lang: FactorLanguage) -> SOCViolation | None:
    """Symmetric order condition: whenever asd and bsc are factors with a ≠ b
    and c ≠ d, a < b iff c < d.  Returns the first violation found."""
    ends: dict[Word, set[tuple[str, str]]] = {}
    for f in lang.factors:
        if len(f) >= 2:
            ends.setdefault(f[1:-1], set()).add((f[0], f[-1]))
    for s in sorted(ends, key=lambda t: (len(t), t)):
        pairs = sorted(ends[s])
        for a, d in pairs:
            for b, c in pairs:
                if a != b and c != d and (a < b) != (c < d):
                    return SOCViolation(s, a, b, c, d)
    return None


def symmetry_check(lang: FactorLanguage) -> Word | None:
    """A factor whose reversal is missing, or ``None`` if closed under reversal."""
    for f in sorted(lang.factors, key=lambda t: (len(t), t)):
        if f[::-1] not in lang.factors:
            return f
    return None


def arrival_departure(lang: FactorLanguage, w: Word) -> tuple[frozenset[str], frozenset[str]]:
    """(A(w), D(w)): letters that can precede, resp. follow, ``w``."""
    if len(w) >= lang.max_len - 1 and w:
        raise ScopeError(f"|w| = {len(w)} is too long for factors up to length {lang.max_len}")
    if w not in lang:
        raise ScopeError(f"{w!r} is not in the language")
    letters = lang.letters
    arrivals = frozenset(c for c in letters if c + w in lang.factors)
    departures = frozenset(c for c in letters if w + c in lang.factors)
    return arrivals, departures


def is_integer_interval(letters: Iterable[str]) -> bool:
    """Consecutive integers; equivalently a σ-interval, since σ reverses the order."""
    vals = sorted(int(c) for c in letters)
    return bool(vals) and vals == list(range(vals[0], vals[-1] + 1))


def sigma_less(a: str, b: str, k: int) -> bool:
    """a <_σ b for σ(i) = k+1-i."""
    return k + 1 - int(a) < k + 1 - int(b)


@dataclass
class ConditionVerdict:
    holds: bool | None
    witness: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {"verdict": {True: "holds", False: "fails", None: "skipped"}[self.holds], "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class HReport:
    conditions: dict[str, ConditionVerdict] = field(default_factory=dict)

    def __getitem__(self, key: str) -> ConditionVerdict:
        return self.conditions[key]

    def to_dict(self) -> dict:
        return {name: v.to_dict() for name, v in self.conditions.items()}


def _by_length(words: Iterable[Word]) -> list[Word]:
    return sorted(words, key=lambda t: (len(t), t))


def h_conditions_check(lang: FactorLanguage, k: int, span: int | None = None) -> HReport:
    """Finite-scale evaluation of (H0)–(H5) for π0 = identity, π1 = σ, plus the
    interval property and the hypothesis "some a has D(aw) = D(w)".

    Only words ``w`` with ``|w| <= max_len - 3`` are examined, so that every
    ``D(aw)`` is read from complete data.  H1 (minimality) is replaced by a
    uniform-recurrence surrogate on the source window.
    """
    report = HReport()
    letters = [str(i) for i in range(1, k + 1)]
    present = lang.letters
    missing = [c for c in letters if c not in present]
    report.conditions["H0"] = ConditionVerdict(not missing, {"missing": missing} if missing else None)

    report.conditions["H1"] = _minimality_surrogate(lang, span)

    candidates = [""] + _by_length(w for w in lang.factors if len(w) <= lang.max_len - 3)
    ad = {w: arrival_departure(lang, w) for w in candidates}

    def dep(w: Word) -> frozenset[str]:
        return ad[w][1] if w in ad else frozenset(c for c in lang.letters if w + c in lang.factors)

    h2 = h3 = h4 = h5 = interval = idoc = None
    for w in candidates:
        arr, dpt = ad[w]
        bispecial = len(arr) >= 2 and len(dpt) >= 2
        if h2 is None and bispecial and not is_integer_interval(arr):
            h2 = {"w": w, "A": sorted(arr)}
        if h3 is None and bispecial:
            for a in sorted(arr):
                da = dep(a + w)
                if not is_integer_interval(da):
                    h3 = {"w": w, "a": a, "D": sorted(da)}
                    break
        if h4 is None:
            for a in sorted(arr):
                for b in sorted(arr):
                    if not sigma_less(a, b, k):
                        continue
                    bad = [(c, d) for c in dep(a + w) for d in dep(b + w) if not c <= d]
                    if bad:
                        c, d = min(bad)
                        h4 = {"w": w, "a": a, "b": b, "c": c, "d": d}
                        break
                if h4 is not None:
                    break
        if h5 is None:
            for a in sorted(arr):
                b = str(int(a) + 1)
                if b in arr:
                    da, db = dep(a + w), dep(b + w)
                    if len(da & db) != 1:
                        h5 = {
                            "w": w,
                            "a": a,
                            "b": b,
                            f"D({a + w})": sorted(da),
                            f"D({b + w})": sorted(db),
                            "intersection": sorted(da & db),
                        }
                        break
        if interval is None and (arr or dpt) and not (is_integer_interval(arr) and is_integer_interval(dpt)):
            interval = {"s": w, "A": sorted(arr), "D": sorted(dpt)}
        if idoc is None and arr and not any(dep(a + w) == dpt for a in arr):
            idoc = {"w": w, "D": sorted(dpt)}

    for name, wit in (("H2", h2), ("H3", h3), ("H4", h4), ("H5", h5), ("interval", interval), ("idoc_hypothesis", idoc)):
        report.conditions[name] = ConditionVerdict(wit is None, wit)
    return report


def _minimality_surrogate(lang: FactorLanguage, span: int | None) -> ConditionVerdict:
    note = "surrogate: uniform recurrence within the source window, not minimality"
    if not lang.source:
        return ConditionVerdict(None, None, note + "; no source window")
    m = max(1, lang.max_len // 2)
    src = lang.source
    span = span if span is not None else len(src) // 2
    if span < m or span > len(src):
        return ConditionVerdict(None, None, note + f"; span {span} unusable")
    targets = {src[i : i + m] for i in range(len(src) - m + 1)}
    for start in range(0, len(src) - span + 1):
        chunk = src[start : start + span]
        absent = [t for t in sorted(targets) if t not in chunk]
        if absent:
            return ConditionVerdict(False, {"window_start": start, "span": span, "factor": absent[0]}, note)
    return ConditionVerdict(True, None, note)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse rational {text!r}") from None


def parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.rpartition(":")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise DomainError(f"cannot parse window {text!r}; expected lo:hi") from None


def random_spec(rng, k: int, max_den: int = 50) -> IETSpec:
    """Random symmetric k-IET whose lengths share a denominator q <= max_den."""
    q = rng.randint(k, max_den)
    cuts = sorted(rng.sample(range(1, q), k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [q])]
    return IETSpec(tuple(Fraction(p, q) for p in parts))


def letters_of(spec_or_k: IETSpec | int) -> Sequence[str]:
    k = spec_or_k.k if isinstance(spec_or_k, IETSpec) else spec_or_k
    return [str(i) for i in range(1, k + 1)]
