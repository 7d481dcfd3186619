"""Tabulate Markoff, balance and window-singularity verdicts over small periodic bi-infinite words.

    python3 scripts/markoff_survey.py --max-period 3 --max-center 3
"""

import argparse
import itertools
from collections import Counter

from singwords.streams import BiWord, balance_check_biword, markoff_check, window_singular_check
from singwords.words import OrderedAlphabet


def words(max_len: int, min_len: int):
    for n in range(min_len, max_len + 1):
        for tup in itertools.product("ab", repeat=n):
            yield "".join(tup)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-period", type=int, default=3)
    parser.add_argument("--max-center", type=int, default=3)
    parser.add_argument("--show", type=int, default=10, help="print this many Markoff words")
    args = parser.parse_args()
    orders = [OrderedAlphabet.parse("a<b"), OrderedAlphabet.parse("b<a")]
    table = Counter()
    shown = 0
    for left, center, right in itertools.product(
        words(args.max_period, 1), words(args.max_center, 0), words(args.max_period, 1)
    ):
        x = BiWord(left, center, right)
        m = markoff_check(x).holds
        b = balance_check_biword(x).balanced
        s = all(not window_singular_check(x, alphabet=o).violation for o in orders)
        table[(m, b, s)] += 1
        if m and shown < args.show:
            print(f"  Markoff: {x}")
            shown += 1
    print("(markoff, balanced, window-singular) -> count")
    for key, count in sorted(table.items()):
        print(f"  {key} -> {count}")


if __name__ == "__main__":
    main()
