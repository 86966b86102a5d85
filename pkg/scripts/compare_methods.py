"""Cross-check all four methods on random rational coefficient tables.

    python3 scripts/compare_methods.py --trials 50 --n-max 12 --seed 7

Writes nothing; exits 1 at the first disagreement and prints the offending
coefficient spec so it can be replayed with ``trirec compare --coeffs``.
"""
import argparse
import random
import sys
from fractions import Fraction

from trirec import dump_table_spec, table
from trirec.engines import compare


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    for trial in range(args.trials):
        values = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(max(args.n_max, 1))]
        report = compare(table(values), args.n_max)
        if not report["all_equal"]:
            bad = next(row for row in report["rows"] if not row["equal"])
            print(f"trial {trial}: methods disagree at n={bad['n']}: {bad['values']}")
            print(dump_table_spec(values))
            sys.exit(1)
    print(f"{args.trials} random tables, n = 0..{args.n_max}: all methods agree")


if __name__ == "__main__":
    main()
