"""Look for negative-degree derivations on inputs outside the theorem's hypotheses.

Enumerates two-variable binomials and trinomials x^a + c*y^b (+ mixed term)
with small weights, for n in {1, 2, 3}, and reports every instance whose
derivation algebra has a nonzero component of negative degree together with
whether the witness has the form c * x2^b d/dx1.

    python scripts/negative_witness_search.py [--max-exp 6] [--json out.json]
"""

import argparse
import itertools
import json
import sys
import time

from nashjac.algebra import quotient_algebra
from nashjac.derivations import derivation_space, has_negative_derivation, has_proof_shape
from nashjac.errors import InputError
from nashjac.parse import infer_weights
from nashjac.poly import Polynomial, format_polynomial


def candidates(max_exp):
    for a, b in itertools.product(range(2, max_exp + 1), repeat=2):
        yield Polynomial({(a, 0): 1, (0, b): -1}, 2)
        # add a mixed monomial of the same weighted degree when one exists
        for i in range(1, a):
            num = (a - i) * b
            if num % a == 0:
                yield Polynomial({(a, 0): 1, (0, b): -1, (i, num // a): 2}, 2)


def hypothesis_status(w, d, n):
    broken = []
    if w[0] < w[1]:
        broken.append("w1 < w2")
    if d < 2 * w[0]:
        broken.append("d < 2*w1")
    if n < 3:
        broken.append(f"n = {n}")
    return broken


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-exp", type=int, default=6)
    ap.add_argument("--orders", default="1,2,3")
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    found = []
    tried = 0
    t0 = time.time()
    for f in candidates(args.max_exp):
        try:
            w, d = infer_weights(f)
        except InputError:
            continue
        for n in (int(x) for x in args.orders.split(",")):
            try:
                Q = quotient_algebra(f, n, w)
            except InputError:
                continue
            tried += 1
            D = has_negative_derivation(Q, derivation_space(Q))
            if D is None:
                continue
            row = {
                "f": format_polynomial(f),
                "weights": list(w.weights),
                "d": d,
                "n": n,
                "broken": hypothesis_status(w.weights, d, n),
                "degree": D.degree,
                "witness": [format_polynomial(h) for h in D.images],
                "proof_shape": has_proof_shape(D),
            }
            found.append(row)
            print(json.dumps(row, sort_keys=True))
    print(f"# {tried} algebras, {len(found)} with negative derivations, {time.time() - t0:.1f}s", file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(found, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
