"""Sweep ternary Parikh vectors: semi-regular argmax versus the constructed singular word.

    python3 scripts/ternary_sweep.py --max-total 10 --assignment 2,3,4 --threads 2
"""

import argparse
import json
import time

from singwords.extremal import verify_ternary_conjecture


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-total", type=int, default=10)
    parser.add_argument("--assignment", action="append", help="digits for a,b,c (repeatable)")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()
    rows = []
    for text in args.assignment or ["2,3,4", "2,3,11"]:
        digits = tuple(int(d) for d in text.split(","))
        start = time.perf_counter()
        report = verify_ternary_conjecture(args.max_total, digits, workers=args.threads)
        rows.append({**report.to_dict(), "seconds": round(time.perf_counter() - start, 2)})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for row in rows:
        a = ",".join(str(v) for v in row["assignment"].values())
        print(f"({a})  vectors={row['checked']}  violations={len(row['violations'])}  {row['seconds']}s")
        for v in row["violations"][:10]:
            print("   ", v)


if __name__ == "__main__":
    main()
