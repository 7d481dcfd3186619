"""Command-line entry point: ``singwords <subcommand> [flags]``.

Every handler returns a plain dict; ``--json`` dumps it (with a schema
version), otherwise it is printed as ``key: value`` lines.  Exit codes are 0
on success, 2 on usage errors and 1 on domain errors.
"""

from __future__ import annotations

import argparse
import configparser
import contextlib
import json
import random
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

from . import binary, continuants, extremal, iet, streams, ternary, words
from .errors import DomainError, SingwordsError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Defaults:
    """Caps a config file may override."""

    search_cap: int = extremal.SEARCH_CAP
    tridiagonal_cap: int = continuants.TRIDIAGONAL_CAP
    window_radius: int = 0  # 0 means "derive from the word"
    max_factor_len: int = 8
    iet_window: int = 4000


def load_config(path: str | None) -> Defaults:
    if path is None:
        return Defaults()
    parser = configparser.ConfigParser()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read config {path}: {exc.strerror}") from None
    parser.read_string("[defaults]\n" + text)
    known = {f.name for f in fields(Defaults)}
    values = {}
    for key, raw in parser["defaults"].items():
        if key not in known:
            raise DomainError(f"unknown config key {key!r}; known: {sorted(known)}")
        try:
            values[key] = int(raw)
        except ValueError:
            raise DomainError(f"config key {key!r} needs an integer, got {raw!r}") from None
    return replace(Defaults(), **values)


def _assignment(text: str, letters: str) -> dict[str, int]:
    digits = continuants.parse_digits(text)
    if len(digits) != len(letters):
        raise DomainError(f"need {len(letters)} digits for letters {letters}, got {len(digits)}")
    return dict(zip(letters, digits))


def cmd_continuant(args, defaults: Defaults) -> dict:
    digits = continuants.parse_digits(args.digits)
    fn = continuants.continuant_semiregular if args.kind == "semi" else continuants.continuant_regular
    out = {"kind": args.kind, "digits": list(digits), "value": str(fn(digits))}
    if args.matrix:
        perm, det = continuants.tridiagonal_check(digits, defaults.tridiagonal_cap)
        out.update(permanent=str(perm), determinant=str(det))
    return out


def cmd_classify(args, defaults: Defaults) -> dict:
    alphabet = words.OrderedAlphabet.parse(args.alphabet) if args.alphabet else None
    if alphabet is not None:
        alphabet.validate(args.word)
    fn = words.classify_singular_fast if args.fast else words.classify_singular
    out = {"word": args.word}
    if alphabet is not None:
        out["alphabet"] = str(alphabet)
    out.update(fn(args.word, alphabet).to_dict())
    return out


def cmd_construct(args, defaults: Defaults) -> dict:
    v = ternary.parse_parikh(args.parikh, args.letters)
    x, rx = ternary.construct_ternary(v, args.letters)
    trace = ternary.reduction_trace(v)
    return {
        "parikh": dict(zip(args.letters, v)),
        "word": x,
        "reverse": rx,
        "trace": [s.rule.value for s in trace],
    }


def cmd_christoffel(args, defaults: Defaults) -> dict:
    spec = binary.ChristoffelSpec(args.p, args.q, args.power)
    return {"p": args.p, "q": args.q, "power": args.power, "word": spec.word(args.a, args.b)}


def cmd_search(args, defaults: Defaults) -> dict:
    m = extremal.parse_multiset(args.multiset)
    cap = args.cap if args.cap is not None else defaults.search_cap
    result = extremal.brute_extremal(m, args.objective, cap=cap, workers=args.threads)
    return result.to_dict()


def cmd_verify(args, defaults: Defaults) -> dict:
    letters = "abc"
    report = extremal.verify_ternary_conjecture(
        args.max_total, _assignment(args.assignment, letters), letters, workers=args.threads
    )
    return {"ok": report.ok, **report.to_dict()}


def _biword(args) -> streams.BiWord:
    try:
        return streams.BiWord(args.left, args.center, args.right)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def cmd_markoff(args, defaults: Defaults) -> dict:
    x = _biword(args)
    a, b = args.letters
    result = streams.markoff_check(x, a, b)
    out = {"biword": x.to_dict(), **result.to_dict()}
    if args.balance:
        out["balanced"] = streams.balance_check_biword(x).balanced
    return out


def cmd_window(args, defaults: Defaults) -> dict:
    alphabet = words.OrderedAlphabet.parse(args.alphabet) if args.alphabet else None
    radius = args.radius if args.radius is not None else (defaults.window_radius or None)
    if args.word is not None:
        if args.left or args.right:
            raise DomainError("give either --word or --left/--right, not both")
        x = args.word
        subject = {"word": x}
    else:
        x = _biword(args)
        subject = {"biword": x.to_dict()}
    verdict = streams.window_singular_check(x, radius, alphabet)
    return {**subject, **verdict.to_dict()}


def _iet_spec(args) -> iet.IETSpec:
    if args.lengths:
        return iet.IETSpec.parse(args.lengths)
    if args.random_k:
        return iet.random_spec(random.Random(args.seed), args.random_k)
    raise DomainError("give --lengths or --random-k")


def cmd_iet_code(args, defaults: Defaults) -> dict:
    spec = _iet_spec(args)
    lo, hi = iet.parse_window(args.window)
    point = iet.parse_rational(args.point)
    window = iet.natural_coding(spec, point, lo, hi)
    return {**spec.to_dict(), "point": str(point), "lo": lo, "hi": hi, "word": window.word}


def _substitution(text: str) -> dict[str, str]:
    rules = {}
    for part in text.split(","):
        key, sep, img = part.partition("=")
        if not sep or len(key.strip()) != 1 or not img.strip():
            raise DomainError(f"cannot parse rule {part!r}; expected letter=image")
        rules[key.strip()] = img.strip()
    return rules


def cmd_iet_check(args, defaults: Defaults) -> dict:
    n = args.window if args.window is not None else defaults.iet_window
    max_len = args.max_factor_len if args.max_factor_len is not None else defaults.max_factor_len
    if args.substitute:
        # image of 0 followed by the Fibonacci word
        seed = "0" + iet.fibonacci_word(n)
        word = iet.morphic_word(_substitution(args.substitute), seed, n)
        k = max(int(c) for c in word)
        source = {"substitute": args.substitute}
    else:
        spec = _iet_spec(args)
        point = iet.parse_rational(args.point)
        word = iet.natural_coding(spec, point, 0, n - 1).word
        k = spec.k
        source = {**spec.to_dict(), "point": str(point)}
    lang = iet.collect_language(word, max_len)
    soc = iet.soc_check(lang)
    missing = iet.symmetry_check(lang)
    return {
        **source,
        "window": n,
        "max_factor_len": max_len,
        "prefix": word[:60],
        "soc": {"verdict": "holds" if soc is None else "fails", "witness": None if soc is None else soc.to_dict()},
        "symmetric": {"verdict": "holds" if missing is None else "fails", "witness": missing},
        "conditions": iet.h_conditions_check(lang, k, args.span).to_dict(),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")
    common.add_argument("--config", help="key=value file of default caps")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomized choice")

    parser = argparse.ArgumentParser(prog="singwords", description="Singular words, extremal continuants and symmetric interval exchanges.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("continuant", parents=[common], help="evaluate K or K-dot")
    p.add_argument("--kind", choices=("regular", "semi"), default="regular")
    p.add_argument("--digits", required=True, help="comma-separated positive integers")
    p.add_argument("--matrix", action="store_true", help="also report permanent and determinant")
    p.set_defaults(handler=cmd_continuant)

    p = sub.add_parser("classify", parents=[common], help="singular or reversible")
    p.add_argument("--word", required=True)
    p.add_argument("--alphabet", help='ordered alphabet such as "a<b<c"')
    p.add_argument("--fast", action="store_true", help="shortest-witness search with early exit")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="singular word of a ternary Parikh vector")
    p.add_argument("--parikh", required=True, help='e.g. "a=3,b=5,c=7"')
    p.add_argument("--letters", default="abc")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("christoffel", parents=[common], help="lower Christoffel word")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--a", default="a")
    p.add_argument("--b", default="b")
    p.set_defaults(handler=cmd_christoffel)

    p = sub.add_parser("search", parents=[common], help="brute-force extremal arrangements")
    p.add_argument("--multiset", required=True, help="comma-separated digits")
    p.add_argument("--objective", choices=extremal.OBJECTIVES, default="semi-max")
    p.add_argument("--cap", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="ternary maximizer sweep")
    p.add_argument("--max-total", type=int, default=8)
    p.add_argument("--assignment", default="2,3,4", help="digits for a,b,c")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("markoff", parents=[common], help="Markoff property of a periodic bi-infinite word")
    p.add_argument("--left", required=True)
    p.add_argument("--center", default="")
    p.add_argument("--right", required=True)
    p.add_argument("--letters", default="ab")
    p.add_argument("--balance", action="store_true")
    p.set_defaults(handler=cmd_markoff)

    p = sub.add_parser("window", parents=[common], help="search a window for a reversible factorization")
    p.add_argument("--word", help="finite prefix of a one-sided word")
    p.add_argument("--left", default="")
    p.add_argument("--center", default="")
    p.add_argument("--right", default="")
    p.add_argument("--radius", type=int)
    p.add_argument("--alphabet")
    p.set_defaults(handler=cmd_window)

    p = sub.add_parser("iet", parents=[common], help="symmetric interval exchanges")
    iet_sub = p.add_subparsers(dest="iet_command", required=True)
    for name, handler, help_text in (
        ("code", cmd_iet_code, "natural coding window"),
        ("check", cmd_iet_check, "language conditions"),
    ):
        q = iet_sub.add_parser(name, parents=[common], help=help_text)
        q.add_argument("--lengths", help='e.g. "1/3,1/4,5/12"')
        q.add_argument("--random-k", type=int, help="draw a random spec with this many intervals")
        q.add_argument("--point", default="0")
        q.set_defaults(handler=handler)
        if name == "code":
            q.add_argument("--window", default="0:20", help="lo:hi")
        else:
            q.add_argument("--window", type=int, help="number of letters")
            q.add_argument("--max-factor-len", type=int)
            q.add_argument("--span", type=int, help="window span for the recurrence surrogate")
            q.add_argument("--substitute", help='code 0·Fibonacci under e.g. "0=1213,1=12213"')
    return parser


def render_plain(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=False)
        elif isinstance(value, bool) or value is None:
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _join_negative_window(argv: list[str]) -> list[str]:
    # "--window -50:50" would otherwise look like an unknown flag
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _join_negative_window(list(sys.argv[1:] if argv is None else argv))
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        defaults = load_config(args.config)
        payload = args.handler(args, defaults)
    except SingwordsError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.json:
        command = args.command if args.command != "iet" else f"iet {args.iet_command}"
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": command, **payload}), file=stdout)
    else:
        print(render_plain(payload), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
