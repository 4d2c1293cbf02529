"""Exhaustive selection sweeps for the degree bounds.

Prints max c against sM - s for the standard grading and, for two variables,
the weighted sweep over all 5 >= w1 >= w2 >= 1.

    python scripts/bounds_sweep.py [--max-weight 5] [--orders 3,4]
"""

import argparse

from nashjac.bounds import check_homogeneous_bound, check_weighted_bound_s2
from nashjac.jacobian import cardinalities
from nashjac.poly import WeightSystem


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-weight", type=int, default=5)
    ap.add_argument("--orders", default="3,4")
    args = ap.parse_args(argv)

    print("standard grading")
    for s, n in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]:
        rep = check_homogeneous_bound(s, n)
        M = cardinalities(s, n).M
        print(f"  s={s} n={n} selections={len(rep.checks):>6} max c={rep.max_c:>3} sM-s={s * M - s:>3} "
              f"{'ok' if rep.passed else 'FAIL'}")

    print("two variables, weighted")
    for n in (int(x) for x in args.orders.split(",")):
        for w1 in range(1, args.max_weight + 1):
            for w2 in range(1, w1 + 1):
                rep = check_weighted_bound_s2(WeightSystem((w1, w2)), n)
                M = cardinalities(2, n).M
                generic = max(ch.c for ch in rep.checks if not ch.exceptional)
                (special,) = rep.exceptional
                print(f"  n={n} w=({w1},{w2}) exceptional c={special.c} (w1 M={w1 * M}) "
                      f"max other c={generic} |w|M-|w|={(w1 + w2) * (M - 1)} {'ok' if rep.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
