"""Four-letter counterexample: singular words versus the brute-force maximizer.

    python3 scripts/example2.py
    python3 scripts/example2.py --assignment 3,4,15,16
"""

import argparse

from singwords.extremal import four_letter_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--counts", default="1,2,1,2", help="multiplicities of a,b,c,d")
    parser.add_argument("--assignment", action="append", help="digits for a,b,c,d (repeatable)")
    args = parser.parse_args()
    counts = dict(zip("abcd", (int(n) for n in args.counts.split(","))))
    assignments = args.assignment or ["3,4,5,6", "3,4,15,16", "3,4,7,8"]
    for text in assignments:
        digits = dict(zip("abcd", (int(d) for d in text.split(","))))
        report = four_letter_check(counts, digits)
        print(f"assignment {text}")
        for w in report.singular_words:
            mark = "  <- max" if w in report.maximizers else ""
            print(f"  {w}  {w[::-1]}  K = {report.values[w]}{mark}")
        r = report.result
        print(f"  brute max {r.value} over {len(r.argext)} reversal class(es): {[list(a) for a in r.argext]}")


if __name__ == "__main__":
    main()
