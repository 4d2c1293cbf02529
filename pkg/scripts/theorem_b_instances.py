"""Graded derivation dimensions for the four standard curve singularities at order n.

    python scripts/theorem_b_instances.py [--n 3] [--jobs 1]
"""

import argparse
import time

from nashjac.derivations import verify_theorem_b
from nashjac.parse import parse_polynomial
from nashjac.poly import WeightSystem

INSTANCES = [("x^2 - y^3", (3, 2)), ("x^2 - y^5", (5, 2)), ("x^3 - y^4", (4, 3)), ("x^3 - y^5", (5, 3))]


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    print(f"{'f':<12} {'w':<8} {'dim Q':>6} {'socle':>6} {'dim L0':>7} {'neg':>4} {'secs':>6}")
    for text, w in INSTANCES:
        t = time.perf_counter()
        rep = verify_theorem_b(parse_polynomial(text), WeightSystem(w), args.n, jobs=args.jobs)
        neg = sum(v for k, v in rep.dims.items() if k < 0)
        print(f"{text:<12} {str(w):<8} {rep.dimension:>6} {rep.socle:>6} {rep.dims.get(0, 0):>7} {neg:>4} "
              f"{time.perf_counter() - t:>6.2f}")
        for flag in rep.flags:
            print(f"  note: {flag}")


if __name__ == "__main__":
    main()
