"""Language conditions for the substitutive ternary example and for random symmetric IETs.

    python3 scripts/iet_example.py --window 4000 --max-len 8 --random 5 --seed 1
"""

import argparse
import random
from fractions import Fraction

from singwords.iet import (
    collect_language,
    fibonacci_word,
    h_conditions_check,
    morphic_word,
    natural_coding,
    random_spec,
    soc_check,
    symmetry_check,
)


def summarize(name: str, word: str, k: int, max_len: int) -> None:
    lang = collect_language(word, max_len)
    report = h_conditions_check(lang, k)
    soc, sym = soc_check(lang), symmetry_check(lang)
    print(f"{name}: {word[:40]}...")
    print(f"  soc={'holds' if soc is None else soc.to_dict()}  symmetric={'holds' if sym is None else sym}")
    for cond, verdict in report.conditions.items():
        state = {True: "holds", False: "FAILS", None: "skipped"}[verdict.holds]
        extra = f"  {verdict.witness}" if verdict.witness else ""
        print(f"  {cond:16s} {state}{extra}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--window", type=int, default=4000)
    parser.add_argument("--max-len", type=int, default=8)
    parser.add_argument("--random", type=int, default=3, help="number of random specs")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    n = args.window
    word = morphic_word({"0": "1213", "1": "12213"}, "0" + fibonacci_word(n), n)
    summarize("0·fib under 0->1213, 1->12213", word, 3, args.max_len)
    rng = random.Random(args.seed)
    for _ in range(args.random):
        spec = random_spec(rng, rng.randint(2, 4))
        lengths = ",".join(str(a) for a in spec.lengths)
        summarize(f"IET({lengths})", natural_coding(spec, Fraction(0), 0, n - 1).word, spec.k, args.max_len)


if __name__ == "__main__":
    main()
