"""Acceptance criteria, one test per criterion.

Each test records a single ``[ACCEPT] <id> PASS|FAIL ...`` line, printed
in the "acceptance criteria" section at the end of the pytest run.  All arithmetic is exact,
so every comparison is equality.
"""

import io
import json
import random
import time
from contextlib import redirect_stdout
from math import comb

import pytest

from nashjac.algebra import MonomialOrder, hilbert_function, nash_ideal_generators, quotient_algebra, quotient_by
from nashjac.bounds import check_degree_lower_bound_homogeneous, check_homogeneous_bound, check_weighted_bound_s2
from nashjac.cli import main as cli_main
from nashjac.derivations import derivation_space, has_proof_shape, verify_theorem_b
from nashjac.errors import InputError
from nashjac.jacobian import build_jacobian, index_sets, verify_theorem_a
from nashjac.parse import infer_weights, parse_polynomial
from nashjac.poly import Polynomial, WeightSystem

from conftest import ACCEPT_LINES
from oracles import dense_derivation_dims, random_weighted_poly, truncated_quotient_dims


def report(cid, ok, detail=""):
    line = f"[ACCEPT] {cid:<28} {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPT_LINES.append(line)
    print(line)
    assert ok, line


def P2(text):
    f = parse_polynomial(text)
    pad = (0,) * (2 - f.nvars)
    return Polynomial({e + pad: c for e, c in f.items()}, 2)


# 1 -------------------------------------------------------------------------

def test_c01_cusp_matrix():
    t = time.perf_counter()
    J = build_jacobian(parse_polynomial("x^3 - y^2"), 2)
    expected = [
        ["3*x^2", "-2*y", "3*x", "0", "-1"],
        ["x^3 - y^2", "0", "3*x^2", "-2*y", "0"],
        ["0", "x^3 - y^2", "0", "3*x^2", "-2*y"],
    ]
    ok = (
        J.rows == ((0, 0), (1, 0), (0, 1))
        and J.cols == ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
        and all(e == P2(x) for row, er in zip(J.entries, expected) for e, x in zip(row, er))
    )
    dt = time.perf_counter() - t
    report("1 cusp Jac_2 matrix", ok and dt < 1, f"{dt:.3f}s")


# 2 -------------------------------------------------------------------------

def test_c02_cardinalities():
    t = time.perf_counter()
    bad = []
    for s in range(1, 5):
        for n in range(1, 7):
            idx = index_sets(s, n)
            M, N, l = comb(s + n - 1, s), comb(s + n, s), comb(n + s - 1, s - 1)
            if (len(idx.B), len(idx.A), len(idx.Cn)) != (M, N, l) or l != N - M:
                bad.append((s, n))
    dt = time.perf_counter() - t
    report("2 cardinalities", not bad and dt < 1, f"24 (s,n) pairs, {dt:.3f}s, bad={bad}")


# 3 -------------------------------------------------------------------------

def test_c03_theorem_a_property_suite():
    rng = random.Random(2024)
    t = time.perf_counter()
    done, violations, minors = 0, 0, 0
    while done < 100:
        s, n = rng.choice([2, 3]), rng.choice([2, 3])
        w = tuple(rng.randint(1, 5) for _ in range(s))
        d = rng.randint(1, 12)
        f = random_weighted_poly(rng, w, d, min_terms=3)
        if f is None:
            continue
        rep = verify_theorem_a(f, WeightSystem(w), n)
        violations += len(rep.violations)
        minors += rep.nonzero
        done += 1
    dt = time.perf_counter() - t
    report("3 minor degrees dM-c", violations == 0 and dt < 300,
           f"100 polys, {minors} nonzero minors, {violations} violations, {dt:.1f}s")


# 4 -------------------------------------------------------------------------

def test_c04_homogeneous_bound():
    sweeps = [check_homogeneous_bound(s, n) for s, n in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]]
    rng = random.Random(11)
    forms = 0
    low = []
    while forms < 20:
        s, n = rng.choice([2, 3]), rng.choice([2, 3])
        d = rng.randint(s, 5)
        f = random_weighted_poly(rng, (1,) * s, d, min_terms=2)
        if f is None:
            continue
        rep = check_degree_lower_bound_homogeneous(f, n)
        if rep.min_minor_degree is not None and rep.min_minor_degree < d:
            low.append((str(f), n))
        forms += 1
    ok = all(r.passed for r in sweeps) and not low
    report("4 homogeneous bound", ok,
           f"{sum(len(r.checks) for r in sweeps)} selections, 20 forms, violations={low}")


# 5 -------------------------------------------------------------------------

def test_c05_weighted_bounds():
    t = time.perf_counter()
    failures = []
    cases = 0
    for w1 in range(1, 6):
        for w2 in range(1, w1 + 1):
            for n in (3, 4):
                cases += 1
                M = comb(n + 1, 2)
                idx = index_sets(2, n)
                # independent recomputation of the identity and the special set
                if sum(a[0] * w1 + a[1] * w2 for a in idx.Cn) != (w1 + w2) * M:
                    failures.append(("identity", w1, w2, n))
                special = tuple(a for a in idx.A1 if a[0] > 0)  # B1 u Cn minus pure x2 powers
                rep = check_weighted_bound_s2(WeightSystem((w1, w2)), n)
                hits = [ch for ch in rep.checks if ch.columns == special]
                if len(hits) != 1 or hits[0].c != w1 * M or len(rep.exceptional) != 1:
                    failures.append(("special", w1, w2, n))
                if any(not ((w1 + w2) * M >= ch.c + w1 + w2) for ch in rep.checks if ch.columns != special):
                    failures.append(("bound", w1, w2, n))
    dt = time.perf_counter() - t
    report("5 weighted bounds s=2", not failures and dt < 60, f"{cases} cases, {dt:.1f}s, failures={failures}")


# 6 -------------------------------------------------------------------------

def test_c06_tjurina_oracle():
    cusp = parse_polynomial("x^3 - y^2")
    W = WeightSystem((2, 3))
    Q1 = quotient_algebra(cusp, 1, W)
    x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)
    ok = Q1.dimension == 2 and hilbert_function(Q1) == {0: 1, 2: 1} and set(Q1.groebner.elements) == {x**2, y}
    detail = [f"n=1 dim {Q1.dimension}"]
    for n in (2, 3):
        Q = quotient_algebra(cusp, n, W)
        Qs = quotient_algebra(cusp, n, W, order=MonomialOrder(W).reversed_tiebreak())
        ok &= Q.graded_dims == Qs.graded_dims
        if Q.dimension <= 30:
            ok &= truncated_quotient_dims(nash_ideal_generators(cusp, n, W), W.weights) == Q.graded_dims
        detail.append(f"n={n} dim {Q.dimension}")
    report("6 Tjurina / quotient oracle", ok, ", ".join(detail))


# 7 -------------------------------------------------------------------------

def _test_quotients():
    x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)
    for gens, w in [([x**2, y], (2, 3)), ([x**3, y**2], (1, 1)), ([x**2, y**2], (1, 2)), ([x * y, x**3 + y**3], (1, 1))]:
        yield quotient_by(gens, MonomialOrder(WeightSystem(w)))
    for text, w, n in [("x^3 - y^2", (2, 3), 1), ("x^2 - y^3", (3, 2), 1), ("x^3 - y^4", (4, 3), 1),
                       ("x^2 - y^5", (5, 2), 1), ("x^3 - y^2", (2, 3), 2)]:
        yield quotient_algebra(parse_polynomial(text), n, WeightSystem(w))


def test_c07_derivation_solver_oracle():
    x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)
    Q = quotient_by([x**2, y], MonomialOrder(WeightSystem((2, 3))))
    space = derivation_space(Q)
    nonzero = {k: d for k, d in space.dims.items() if d}
    (D,) = space.components[0]
    ok = nonzero == {0: 1} and D.images[1].is_zero() and set(D.images[0].exponents()) == {(1, 0)}
    agreed = 0
    for Qt in _test_quotients():
        if Qt.dimension > 12:
            continue
        got = {k: d for k, d in derivation_space(Qt).dims.items() if d}
        ok &= got == dense_derivation_dims(Qt)
        agreed += 1
    report("7 derivation solver oracle", ok, f"(x^2,y): {nonzero}; dense oracle on {agreed} quotients")


# 8 -------------------------------------------------------------------------

@pytest.mark.parametrize("text,w", [("x^2 - y^3", (3, 2)), ("x^2 - y^5", (5, 2)), ("x^3 - y^4", (4, 3)), ("x^3 - y^5", (5, 3))])
def test_c08_theorem_b_instances(text, w):
    t = time.perf_counter()
    rep = verify_theorem_b(parse_polynomial(text), WeightSystem(w), 3)
    dt = time.perf_counter() - t
    dim0 = rep.dims.get(0, 0)
    ok = rep.passed and rep.euler_in_degree_zero and dim0 >= 1 and dt < 600
    report(f"8 non-negative Der {text}", ok,
           f"w={w}, dim Q={rep.dimension}, dim L0={dim0}, negative={[k for k, v in rep.dims.items() if k < 0 and v]}, {dt:.1f}s")


# 9 -------------------------------------------------------------------------

def _violating_inputs():
    # unsorted weights, d < 2*w1, and n <= 2
    for text in ["x^3 - y^2", "x^2*y + y^4", "x*y + y^3", "x*y^2 + y^5", "x^2 - y^3", "x^3 - y^4", "x^2*y - y^5",
                 "x^4 - y^3", "x^5 - y^2", "x*y^3 + y^7"]:
        f = parse_polynomial(text)
        for n in (1, 2, 3):
            yield f, n


def test_c09_negative_witness_shape():
    searched, witnesses, bad = 0, 0, []
    for f, n in _violating_inputs():
        try:
            w, _ = infer_weights(f)
            Q = quotient_algebra(f, n, w)
        except InputError:
            continue
        searched += 1
        space = derivation_space(Q)
        for k, comp in space.components.items():
            if k < 0:
                for D in comp:
                    witnesses += 1
                    if not has_proof_shape(D):
                        bad.append((str(f), n, k))
    report("9 negative witness shape", not bad,
           f"{searched} hypothesis-violating algebras, {witnesses} negative witnesses (conditional), bad={bad}")


# 10 ------------------------------------------------------------------------

def _cli_json(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    assert code in (0, 1)
    return buf.getvalue()


def _canonical(text):
    data = json.loads(text)
    if "minors" in data:
        data["minors"] = sorted(data["minors"], key=lambda r: r["columns"])
    return data


def test_c10_determinism():
    runs = [
        ["minors", "--poly", "x^3 - y^2", "--n", "3", "--format", "json"],
        ["minors", "--poly", "x^3 + y^3 + z^3", "--n", "2", "--format", "json"],
        ["ders", "--poly", "x^2 - y^3", "--n", "3", "--format", "json", "--witnesses"],
    ]
    ok = True
    for argv in runs:
        a = _cli_json(argv + ["--jobs", "1"])
        b = _cli_json(argv + ["--jobs", "1"])
        c = _cli_json(argv + ["--jobs", "8"])
        ok &= a == b
        ok &= _canonical(a) == _canonical(c)
    report("10 deterministic JSON", ok, f"{len(runs)} commands, byte-identical at --jobs 1, equal at --jobs 8")
