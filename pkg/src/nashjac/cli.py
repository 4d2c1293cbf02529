"""Command-line front end.

    nashjac jac     --poly "x^3 - y^2" --n 2
    nashjac minors  --poly "x^3 - y^2" --n 2 --format json
    nashjac tjurina --poly "x^3 - y^2" --n 1 --weights 2,3
    nashjac ders    --poly "x^2 - y^3" --n 3 --witnesses
    nashjac check theorem-a --poly "x^5 + y^5" --n 3
    nashjac check theorem-b --poly "x^2 - y^3" --weights 3,2 --n 3
    nashjac check bounds --s 3 --n 2
    nashjac check bounds --weights 3,2 --n 4 --d 6

Exit status: 0 when every checked property holds, 1 when a violation was
found, 2 on input or hypothesis errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algebra import hilbert_function, quotient_algebra
from .bounds import (
    BoundReport,
    check_degree_lower_bound_homogeneous,
    check_homogeneous_bound,
    check_weighted_bound_s2,
    observe_weighted_sweep,
)
from .derivations import derivation_space, euler_derivation, in_span, verify_theorem_b
from .errors import InputError
from .jacobian import build_jacobian, default_jobs, minors_ideal, require_homogeneous, verify_theorem_a
from .parse import infer_weights, parse_weights, parse_with_names
from .poly import Polynomial, WeightSystem, format_polynomial

SCHEMA = "nashjac.report/1"
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("nashjac")


@dataclass
class RunConfig:
    command: str
    poly: Optional[str] = None
    n: Optional[int] = None
    weights: Optional[str] = None
    format: str = "text"
    jobs: int = 1
    out: Optional[str] = None
    target: Optional[str] = None
    s: Optional[int] = None
    d: Optional[int] = None
    witnesses: bool = False
    permute: bool = False


# -- serialisation helpers --------------------------------------------------


def _q(c) -> str:
    return str(Fraction(c))


def _poly(p: Polynomial, names) -> dict:
    return {
        "text": format_polynomial(p, names),
        "terms": [[list(e), _q(c)] for e, c in p.sorted_terms()],
    }


def _label(e) -> str:
    return "(" + ",".join(str(x) for x in e) + ")"


@dataclass
class _Input:
    f: Polynomial
    names: Tuple[str, ...]
    weights: Optional[WeightSystem]
    degree: Optional[int]
    permutation: Optional[List[int]] = None


def _load(cfg: RunConfig, need_weights: bool) -> _Input:
    if cfg.poly is None:
        raise InputError("--poly is required")
    f, names = parse_with_names(cfg.poly)
    if f.is_zero():
        raise InputError("the polynomial must be nonzero")
    w = d = None
    if cfg.weights is not None:
        w = parse_weights(cfg.weights)
        d = require_homogeneous(f, w)
    elif need_weights:
        w, d = infer_weights(f)
    inp = _Input(f, names, w, d)
    if cfg.permute and w is not None:
        perm_order = sorted(range(len(w)), key=lambda i: -w[i])
        if perm_order != list(range(len(w))):
            # variable perm_order[j] becomes variable j
            target = [0] * len(w)
            for j, i in enumerate(perm_order):
                target[i] = j
            inp.f = f.substitute_permutation(target)
            inp.names = tuple(names[i] for i in perm_order)
            inp.weights = WeightSystem(tuple(w[i] for i in perm_order))
            inp.permutation = perm_order
    return inp


def _header(cfg: RunConfig, inp: Optional[_Input]) -> dict:
    out = {"schema": SCHEMA, "command": cfg.command if cfg.command != "check" else f"check {cfg.target}"}
    if cfg.n is not None:
        out["n"] = cfg.n
    if inp is not None:
        out["poly"] = _poly(inp.f, inp.names)
        out["variables"] = list(inp.names)
        if inp.weights is not None:
            out["weights"] = list(inp.weights.weights)
            out["degree"] = inp.degree
        if inp.permutation is not None:
            out["permutation"] = inp.permutation
    return out


def _need_n(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.n < 1:
        raise InputError("--n must be a positive integer")
    return cfg.n


# -- commands ---------------------------------------------------------------


def _cmd_jac(cfg):
    inp = _load(cfg, need_weights=False)
    J = build_jacobian(inp.f, _need_n(cfg))
    out = _header(cfg, inp)
    out.update({
        "shape": list(J.shape),
        "rows": [list(b) for b in J.rows],
        "cols": [list(a) for a in J.cols],
        "entries": [[format_polynomial(p, inp.names) for p in row] for row in J.entries],
    })
    lines = [f"Jac_{J.n}({out['poly']['text']}): {J.shape[0]} x {J.shape[1]}",
             "rows: " + " ".join(_label(b) for b in J.rows),
             "cols: " + " ".join(_label(a) for a in J.cols)]
    for b, row in zip(J.rows, out["entries"]):
        lines.append(f"{_label(b)}: [" + ", ".join(row) + "]")
    return out, lines, EXIT_OK


def _cmd_minors(cfg):
    inp = _load(cfg, need_weights=True)
    ideal = minors_ideal(inp.f, _need_n(cfg), inp.weights, jobs=cfg.jobs)
    out = _header(cfg, inp)
    records = []
    violations = 0
    lines = [f"maximal minors of Jac_{cfg.n}({out['poly']['text']}), weights {inp.weights.weights}, d={inp.degree}"]
    for rec in ideal.records:
        det = rec.determinant
        entry = {
            "columns": [list(a) for a in rec.selection.columns],
            "c": rec.c,
            "predicted_degree": rec.predicted,
            "zero": det.is_zero(),
            "generator": format_polynomial(rec.generator, inp.names),
        }
        if det:
            wd = det.weighted_degree(inp.weights)
            entry["observed_degree"] = [wd.low, wd.high]
            entry["ok"] = wd.homogeneous and wd.low == rec.predicted
        else:
            entry["observed_degree"] = None
            entry["ok"] = True
        violations += not entry["ok"]
        records.append(entry)
        cols = " ".join(_label(a) for a in rec.selection.columns)
        status = "ok" if entry["ok"] else "VIOLATION"
        deg = "zero" if det.is_zero() else f"deg {entry['observed_degree'][0]}"
        lines.append(f"[{cols}] c={rec.c} dM-c={rec.predicted} {deg} {status}: {entry['generator']}")
    out["minors"] = records
    out["summary"] = {
        "selections": len(records),
        "nonzero": sum(1 for r in records if not r["zero"]),
        "distinct_generators": len(ideal.generators),
        "violations": violations,
    }
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(out["summary"].items())))
    return out, lines, EXIT_VIOLATION if violations else EXIT_OK


def _quotient(cfg, inp):
    return quotient_algebra(inp.f, _need_n(cfg), inp.weights, jobs=cfg.jobs)


def _cmd_tjurina(cfg):
    inp = _load(cfg, need_weights=True)
    Q = _quotient(cfg, inp)
    out = _header(cfg, inp)
    hilbert = hilbert_function(Q)
    out.update({
        "dimension": Q.dimension,
        "hilbert": {str(k): v for k, v in hilbert.items()},
        "socle": Q.socle,
        "basis": [format_polynomial(Polynomial.monomial(e), inp.names) for e in Q.basis],
        "groebner": [format_polynomial(g, inp.names) for g in Q.groebner.elements],
    })
    lines = [
        f"dimension: {Q.dimension}",
        f"socle degree: {Q.socle}",
        "hilbert: " + ", ".join(f"{k}:{v}" for k, v in hilbert.items()),
        "groebner basis: " + ", ".join(out["groebner"]),
    ]
    return out, lines, EXIT_OK


def _derivation_json(D, names):
    return [format_polynomial(h, names) for h in D.images]


def _cmd_ders(cfg):
    inp = _load(cfg, need_weights=True)
    Q = _quotient(cfg, inp)
    space = derivation_space(Q, jobs=cfg.jobs)
    out = _header(cfg, inp)
    negative = space.negative_components()
    out.update({
        "dimension": Q.dimension,
        "socle": Q.socle,
        "dims": {str(k): v for k, v in space.dims.items()},
        "total": space.total_dim,
        "negative": bool(negative),
        "euler_in_degree_zero": in_span(Q, euler_derivation(Q), space.components.get(0, ())),
    })
    lines = [f"dim Q = {Q.dimension}, socle degree {Q.socle}, dim Der = {space.total_dim}",
             "k: dim L_k"]
    for k, v in space.dims.items():
        lines.append(f"{k:>4}: {v}")
    lines.append("negative components: " + (", ".join(str(k) for k in negative) if negative else "none"))
    if cfg.witnesses:
        out["basis"] = {str(k): [_derivation_json(D, inp.names) for D in comp]
                        for k, comp in space.components.items() if comp}
        for k, comp in space.components.items():
            for D in comp:
                parts = [f"({format_polynomial(h, inp.names)})*d/d{nm}" for h, nm in zip(D.images, inp.names) if h]
                lines.append(f"L_{k}: " + " + ".join(parts))
    return out, lines, EXIT_VIOLATION if negative else EXIT_OK


def _cmd_theorem_a(cfg):
    inp = _load(cfg, need_weights=True)
    rep = verify_theorem_a(inp.f, inp.weights, _need_n(cfg), jobs=cfg.jobs)
    out = _header(cfg, inp)
    out.update({
        "checked": rep.checked,
        "nonzero": rep.nonzero,
        "passed": rep.passed,
        "violations": [{"columns": [list(a) for a in v["columns"]], "predicted": v["predicted"],
                        "observed": list(v["observed"])} for v in rep.violations],
    })
    lines = [f"every nonzero maximal minor homogeneous of degree dM - c: {'pass' if rep.passed else 'FAIL'}",
             f"selections {rep.checked}, nonzero {rep.nonzero}, violations {len(rep.violations)}"]
    return out, lines, EXIT_OK if rep.passed else EXIT_VIOLATION


def _cmd_theorem_b(cfg):
    inp = _load(cfg, need_weights=True)
    rep = verify_theorem_b(inp.f, inp.weights, _need_n(cfg), jobs=cfg.jobs)
    out = _header(cfg, inp)
    out.update({
        "dimension": rep.dimension,
        "socle": rep.socle,
        "dims": {str(k): v for k, v in rep.dims.items()},
        "passed": rep.passed,
        "euler_in_degree_zero": rep.euler_in_degree_zero,
        "flags": rep.flags,
        "witness": None if rep.witness is None else {
            "degree": rep.witness.degree,
            "images": _derivation_json(rep.witness, inp.names),
            "proof_shape": rep.witness_has_proof_shape,
        },
    })
    lines = [f"dim Q = {rep.dimension}, socle degree {rep.socle}"]
    lines += [f"{k:>4}: {v}" for k, v in rep.dims.items()]
    lines.append(f"non-negatively graded: {'pass' if rep.passed else 'FAIL'}")
    lines.append(f"Euler derivation in L_0: {rep.euler_in_degree_zero}")
    lines += [f"note: {fl}" for fl in rep.flags]
    return out, lines, EXIT_OK if rep.passed else EXIT_VIOLATION


def _bound_json(rep: BoundReport, label: str) -> dict:
    ce = rep.counterexample
    return {
        "kind": label,
        "s": rep.s,
        "n": rep.n,
        "weights": list(rep.weights),
        "d": rep.d,
        "selections": len(rep.checks),
        "max_c": rep.max_c if rep.checks else None,
        "min_minor_degree": rep.min_minor_degree,
        "exceptional": [{"columns": [list(a) for a in ch.columns], "c": ch.c} for ch in rep.exceptional],
        "counterexample": None if ce is None else {"columns": [list(a) for a in ce.columns], "c": ce.c},
        "notes": rep.notes,
        "passed": rep.passed,
    }


def _cmd_bounds(cfg):
    n = _need_n(cfg)
    reports = []
    inp = None
    if cfg.poly is not None:
        inp = _load(cfg, need_weights=True)
        w, d, s = inp.weights, inp.degree, inp.f.nvars
        if all(x == 1 for x in w.weights):
            reports.append(("homogeneous", check_homogeneous_bound(s, n)))
            reports.append(("homogeneous-degree", check_degree_lower_bound_homogeneous(inp.f, n)))
        elif s == 2:
            reports.append(("weighted", check_weighted_bound_s2(w, n, d if d >= 2 * w[0] else None)))
        else:
            reports.append(("weighted-observed", observe_weighted_sweep(w, n, d)))
    elif cfg.weights is not None:
        w = parse_weights(cfg.weights)
        if cfg.permute:
            w = WeightSystem(tuple(sorted(w.weights, reverse=True)))
        if len(w) == 2:
            reports.append(("weighted", check_weighted_bound_s2(w, n, cfg.d)))
        else:
            if cfg.d is None:
                raise InputError("--d is required for an observed weighted sweep")
            reports.append(("weighted-observed", observe_weighted_sweep(w, n, cfg.d)))
    else:
        if cfg.s is None:
            raise InputError("give --s, --weights or --poly")
        reports.append(("homogeneous", check_homogeneous_bound(cfg.s, n)))
    out = _header(cfg, inp)
    out["reports"] = [_bound_json(r, label) for label, r in reports]
    passed = all(r.passed for _, r in reports)
    out["passed"] = passed
    lines = []
    for label, r in reports:
        lines.append(f"{label} sweep s={r.s} n={r.n} w={r.weights}: {len(r.checks)} selections, "
                     f"max c={r.max_c}, {'pass' if r.passed else 'FAIL'}")
        if r.min_minor_degree is not None:
            lines.append(f"  min minor degree {r.min_minor_degree} (d={r.d})")
        for ch in r.exceptional:
            lines.append(f"  exceptional selection c={ch.c}: " + " ".join(_label(a) for a in ch.columns))
        lines += [f"  note: {x}" for x in r.notes]
    return out, lines, EXIT_OK if passed else EXIT_VIOLATION


COMMANDS = {
    "jac": _cmd_jac,
    "minors": _cmd_minors,
    "tjurina": _cmd_tjurina,
    "ders": _cmd_ders,
}
CHECKS = {"theorem-a": _cmd_theorem_a, "theorem-b": _cmd_theorem_b, "bounds": _cmd_bounds}


def render(payload: dict, fmt: str, lines: Sequence[str]) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        handler = CHECKS[cfg.target] if cfg.command == "check" else COMMANDS[cfg.command]
        payload, lines, status = handler(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    text = render(payload, cfg.format, lines)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--poly", help="polynomial, e.g. 'x^3 - y^2' or '2*x1^2*x2 - 1/3*x2^4'")
    common.add_argument("--n", type=int, help="order of the Jacobian matrix")
    common.add_argument("--weights", help="comma-separated positive weights (inferred when omitted)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default $NASHJAC_JOBS or 1)")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--permute", action="store_true", help="reorder variables so weights decrease")

    parser = argparse.ArgumentParser(prog="nashjac", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("jac", parents=[common], help="print the order-n Jacobian matrix")
    sub.add_parser("minors", parents=[common], help="maximal minors with the dM - c degree audit")
    sub.add_parser("tjurina", parents=[common], help="dimension and Hilbert function of the local algebra")
    ders = sub.add_parser("ders", parents=[common], help="graded dimensions of the derivation algebra")
    ders.add_argument("--witnesses", action="store_true", help="print basis derivations")
    check = sub.add_parser("check", parents=[common], help="verify a theorem or bound")
    check.add_argument("target", choices=sorted(CHECKS))
    check.add_argument("--s", type=int, help="variable count for a homogeneous bound sweep")
    check.add_argument("--d", type=int, help="degree for a weighted bound sweep")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        poly=args.poly,
        n=args.n,
        weights=args.weights,
        format=args.format,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        out=args.out,
        target=getattr(args, "target", None),
        s=getattr(args, "s", None),
        d=getattr(args, "d", None),
        witnesses=getattr(args, "witnesses", False),
        permute=args.permute,
    )
    if cfg.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
