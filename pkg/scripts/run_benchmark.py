"""Benchmark the four methods and print a cost table.

    python3 scripts/run_benchmark.py --n-max 16 --repeat 3 --out bench.json

Coefficients default to d = 1 (the Fibonacci case); pass --coeffs FILE for
any coefficient spec, or --random SEED for a random rational table.
"""
import argparse
import json
import random
from fractions import Fraction

from trirec import constant, load_coefficient_spec, table
from trirec.engines import bench


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--coeffs")
    parser.add_argument("--random", type=int, metavar="SEED")
    parser.add_argument("--scalar", default="rational", choices=["rational", "float64"])
    parser.add_argument("--out", help="also write the JSON report here")
    args = parser.parse_args()

    if args.coeffs:
        seq = load_coefficient_spec(args.coeffs, args.scalar)
    elif args.random is not None:
        rng = random.Random(args.random)
        seq = table([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(args.n_max)],
                    scalar=args.scalar)
    else:
        seq = constant(1, scalar=args.scalar)

    report = bench(seq, args.n_max, args.repeat)
    print(f"{'n':>3} {'method':>10} {'terms':>10} {'grid':>12} {'time (us)':>12}")
    for row in report["rows"]:
        grid = "" if row["grid_points"] is None else row["grid_points"]
        print(f"{row['n']:>3} {row['method']:>10} {row['terms_evaluated']:>10} {grid:>12} "
              f"{row['wall_time_ns'] / 1000:>12.1f}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()
