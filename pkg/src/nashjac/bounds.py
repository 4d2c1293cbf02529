"""Degree bounds for maximal minors, checked by sweeping column selections.

Everything here is combinatorial: the weighted degree of a minor is
d*M - c, and c only depends on the selected columns, so the sweeps never
touch a determinant.  ``check_degree_lower_bound_homogeneous`` is the one
place where actual minors of a given f are computed for comparison.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import _flint
from .errors import HypothesisError, InputError
from .jacobian import (
    _resolve_backend,
    all_minor_determinants,
    build_jacobian,
    cardinalities,
    index_sets,
    require_homogeneous,
)
from .poly import Exponent, Polynomial, WeightSystem, dot

log = logging.getLogger(__name__)


@dataclass
class SelectionCheck:
    columns: Tuple[Exponent, ...]
    c: int
    passed: bool
    exceptional: bool = False


@dataclass
class BoundReport:
    s: int
    n: int
    weights: Tuple[int, ...]
    d: Optional[int] = None
    checks: List[SelectionCheck] = field(default_factory=list)
    counterexample: Optional[SelectionCheck] = None
    notes: List[str] = field(default_factory=list)
    min_minor_degree: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def max_c(self) -> int:
        return max(ch.c for ch in self.checks)

    @property
    def exceptional(self) -> List[SelectionCheck]:
        return [ch for ch in self.checks if ch.exceptional]

    def _record(self, check: SelectionCheck):
        self.checks.append(check)
        if not check.passed and self.counterexample is None:
            self.counterexample = check


def _selection_sums(s: int, n: int, w: Sequence[int]):
    """Yield (columns, c) for every maximal-minor selection."""
    idx = index_sets(s, n)
    M = len(idx.B)
    col_w = [dot(a, w) for a in idx.A1]
    row_sum = sum(dot(b, w) for b in idx.B)
    for pos in itertools.combinations(range(len(idx.A1)), M):
        yield tuple(idx.A1[j] for j in pos), sum(col_w[j] for j in pos) - row_sum


def check_homogeneous_bound(s: int, n: int) -> BoundReport:
    """sM >= c + s for every selection, standard grading."""
    if s < 2 or n < 2:
        raise HypothesisError(f"the homogeneous bound needs s >= 2 and n >= 2, got s={s}, n={n}")
    M = cardinalities(s, n).M
    report = BoundReport(s=s, n=n, weights=(1,) * s)
    for cols, c in _selection_sums(s, n, report.weights):
        report._record(SelectionCheck(cols, c, s * M >= c + s))
    return report


def _nonzero_minor_degrees(f: Polynomial, n: int, backend: str = "auto") -> List[int]:
    J = build_jacobian(f, n)
    if _resolve_backend(backend) == "flint":
        _, _, layer = _flint.minors(J)
        return [g.total_degree() for g in layer.values()]
    return [g.total_degree() for g in all_minor_determinants(J, "python").values() if g]


def check_degree_lower_bound_homogeneous(f: Polynomial, n: int, backend: str = "auto") -> BoundReport:
    """Every nonzero maximal minor of a degree-d form has degree >= d (d >= s)."""
    s = f.nvars
    d = require_homogeneous(f, WeightSystem((1,) * s))
    if n < 2 or d < s:
        raise HypothesisError(f"need n >= 2 and d >= s, got n={n}, d={d}, s={s}")
    M = cardinalities(s, n).M
    report = BoundReport(s=s, n=n, weights=(1,) * s, d=d)
    for cols, c in _selection_sums(s, n, report.weights):
        report._record(SelectionCheck(cols, c, d * M - c >= d))
    degrees = _nonzero_minor_degrees(f, n, backend)
    report.min_minor_degree = min(degrees) if degrees else None
    if degrees and min(degrees) < d:
        report.notes.append(f"nonzero minor of degree {min(degrees)} < {d}")
        if report.counterexample is None:
            report.counterexample = SelectionCheck((), -1, False)
    return report


def sum_over_top_order(w: WeightSystem, n: int) -> int:
    """Weighted sum of the order-n exponents; equals |w| * M for two variables."""
    if len(w) != 2:
        raise InputError("the identity is only established for two variables")
    total = sum(dot(a, w.weights) for a in index_sets(2, n).Cn)
    if total != w.total * cardinalities(2, n).M:
        raise ArithmeticError(f"sum over C_{n} is {total}, expected {w.total * cardinalities(2, n).M}")
    return total


def exceptional_selection(n: int) -> Tuple[Exponent, ...]:
    """(B1 u Cn) minus the pure powers of x2, in matrix order."""
    idx = index_sets(2, n)
    drop = set(idx.I(n))
    return tuple(a for a in idx.A1 if (a in idx.B1 or a in idx.Cn) and a not in drop)


def check_weighted_bound_s2(w: WeightSystem, n: int, d: Optional[int] = None) -> BoundReport:
    """Weighted degree bounds for two variables and n >= 3.

    The selection (B1 u Cn) \\ I_n must have c = w1*M; every other selection
    must satisfy |w|M >= c + |w|.  With d >= 2*w1 also checks dM - c >= d.
    """
    if len(w) != 2:
        raise HypothesisError("the weighted bound sweep is for two variables; use observe_weighted_sweep")
    if n < 3:
        raise HypothesisError(f"the weighted bound needs n >= 3, got {n}")
    w1, w2 = w.weights
    if w1 < w2:
        raise InputError(f"weights {w.weights} are not sorted: permute the variables so that w1 >= w2")
    if d is not None and d < 2 * w1:
        raise HypothesisError(f"degree bound needs d >= 2*w1 = {2 * w1}, got d={d}")
    M = cardinalities(2, n).M
    special = exceptional_selection(n)
    report = BoundReport(s=2, n=n, weights=w.weights, d=d)
    report.notes.append(f"sum over C_{n} = {sum_over_top_order(w, n)} = |w|M")
    for cols, c in _selection_sums(2, n, w.weights):
        if cols == special:
            top_free = sum(1 for a in cols if sum(a) < n)
            ok = c == w1 * M and top_free == M - n
            check = SelectionCheck(cols, c, ok, exceptional=True)
        else:
            check = SelectionCheck(cols, c, w.total * M >= c + w.total)
        if d is not None and d * M - c < d:
            check.passed = False
        report._record(check)
    if d is not None:
        report.min_minor_degree = min(d * M - ch.c for ch in report.checks)
    return report


def observe_weighted_sweep(w: WeightSystem, n: int, d: int) -> BoundReport:
    """Record min(dM - c) for any s; nothing is asserted beyond s = 2."""
    s = len(w)
    if s != 2:
        log.warning("weighted sweep for s=%d is experimental; reporting observations only", s)
    M = cardinalities(s, n).M
    report = BoundReport(s=s, n=n, weights=w.weights, d=d)
    for cols, c in _selection_sums(s, n, w.weights):
        report.checks.append(SelectionCheck(cols, c, True))
    report.min_minor_degree = min(d * M - ch.c for ch in report.checks)
    report.notes.append("observation only")
    return report
