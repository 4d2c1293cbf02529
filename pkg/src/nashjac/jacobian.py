"""Higher-order Jacobian matrices and their maximal minors.

Rows are indexed by the exponents beta with |beta| <= n-1, columns by the
exponents alpha with 1 <= |alpha| <= n.  The (beta, alpha) entry is the
divided derivative of f of order alpha - beta, or zero when alpha - beta has
a negative entry.  Both index lists are sorted by total degree and, within a
degree, by decreasing power of x1, then x2, and so on; for two variables this
gives the column layout (1,0), (0,1), (2,0), (1,1), (0,2).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import _flint
from .errors import InputError, NotWeightedHomogeneous
from .poly import Exponent, Polynomial, WeightSystem, dot, format_polynomial

# -- index sets -------------------------------------------------------------


def grading_key(exp: Sequence[int]):
    return (sum(exp), tuple(-x for x in exp))


def exponents_of_order(s: int, k: int) -> List[Exponent]:
    """All exponents in N^s with |gamma| = k, in matrix order."""
    if s == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in exponents_of_order(s - 1, k - first):
            out.append((first,) + rest)
    return out


def exponents_up_to(s: int, lo: int, hi: int) -> List[Exponent]:
    out = []
    for k in range(lo, hi + 1):
        out.extend(exponents_of_order(s, k))
    return out


def _check_sn(s, n):
    if not isinstance(s, int) or not isinstance(n, int) or s < 1 or n < 1:
        raise InputError(f"need s >= 1 and n >= 1, got s={s}, n={n}")


@dataclass(frozen=True)
class IndexSets:
    s: int
    n: int
    B: Tuple[Exponent, ...]
    B1: Tuple[Exponent, ...]
    A: Tuple[Exponent, ...]
    A1: Tuple[Exponent, ...]
    Cn: Tuple[Exponent, ...]

    def C(self, i: int) -> Tuple[Exponent, ...]:
        """Exponents of total order i."""
        return tuple(exponents_of_order(self.s, i))

    def I(self, j: int) -> Tuple[Exponent, ...]:
        """The pure powers (0, 1), ..., (0, j) of the last variable (s = 2)."""
        if self.s != 2:
            raise InputError("I_j is only defined for two variables")
        return tuple((0, k) for k in range(1, j + 1))


def index_sets(s: int, n: int) -> IndexSets:
    _check_sn(s, n)
    B = tuple(exponents_up_to(s, 0, n - 1))
    A = tuple(exponents_up_to(s, 0, n))
    return IndexSets(s=s, n=n, B=B, B1=B[1:], A=A, A1=A[1:], Cn=tuple(exponents_of_order(s, n)))


@dataclass(frozen=True)
class Cardinalities:
    M: int
    N: int
    l: int


def cardinalities(s: int, n: int) -> Cardinalities:
    _check_sn(s, n)
    return Cardinalities(M=comb(s + n - 1, s), N=comb(s + n, s), l=comb(n + s - 1, s - 1))


# -- the matrix -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HigherJacobianMatrix:
    rows: Tuple[Exponent, ...]
    cols: Tuple[Exponent, ...]
    entries: Tuple[Tuple[Polynomial, ...], ...]
    source: Polynomial
    n: int
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def s(self) -> int:
        return self.source.nvars

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, beta: Sequence[int], alpha: Sequence[int]) -> Polynomial:
        return self.entries[self.rows.index(tuple(beta))][self.cols.index(tuple(alpha))]

    def column_index(self, alpha: Sequence[int]) -> int:
        try:
            return self.cols.index(tuple(alpha))
        except ValueError:
            raise InputError(f"{tuple(alpha)} is not a column label") from None

    def submatrix(self, columns: Sequence[Exponent]) -> List[List[Polynomial]]:
        idx = [self.column_index(a) for a in columns]
        return [[row[j] for j in idx] for row in self.entries]

    def __str__(self):
        names = None
        cells = [[format_polynomial(p, names) if p != self.source or not p else "f" for p in row]
                 for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def jacobian_entry(f: Polynomial, beta: Exponent, alpha: Exponent) -> Polynomial:
    delta = tuple(a - b for a, b in zip(alpha, beta))
    if any(x < 0 for x in delta):
        return Polynomial.zero(f.nvars)
    return f.divided_partial(delta)


def build_jacobian(f: Polynomial, n: int) -> HigherJacobianMatrix:
    if not isinstance(f, Polynomial) or f.is_zero():
        raise InputError("the Jacobian matrix needs a nonzero polynomial")
    idx = index_sets(f.nvars, n)
    entries = tuple(tuple(jacobian_entry(f, b, a) for a in idx.A1) for b in idx.B)
    return HigherJacobianMatrix(rows=idx.B, cols=idx.A1, entries=entries, source=f, n=n)


# -- selections -------------------------------------------------------------


@dataclass(frozen=True)
class MinorSelection:
    """M columns of the order-n matrix in ``s`` variables."""

    columns: Tuple[Exponent, ...]
    s: int
    n: int

    def c(self, w) -> int:
        """Weighted column sum minus weighted row sum."""
        w = w.weights if isinstance(w, WeightSystem) else tuple(w)
        return sum(dot(a, w) for a in self.columns) - row_weight_sum(self.s, self.n, w)

    def complement_of_top(self) -> Tuple[Exponent, ...]:
        """Selected columns of order < n."""
        return tuple(a for a in self.columns if sum(a) < self.n)


def row_weight_sum(s: int, n: int, w: Sequence[int]) -> int:
    return sum(dot(b, w) for b in exponents_up_to(s, 0, n - 1))


def enumerate_minor_selections(s: int, n: int) -> Iterator[MinorSelection]:
    idx = index_sets(s, n)
    M = len(idx.B)
    for cols in itertools.combinations(idx.A1, M):
        yield MinorSelection(cols, s, n)


def predicted_degree(sel: MinorSelection, w, d: int) -> int:
    return d * comb(sel.s + sel.n - 1, sel.s) - sel.c(w)


# -- determinants -----------------------------------------------------------
#
# Determinants run on a packed representation: an exponent tuple becomes one
# int with a fixed bit field per variable, so monomial products are int adds.


def _packing(f: Polynomial, M: int):
    top = max(max(e) for e in f.exponents()) if f else 0
    bits = max(8, (top * M + 1).bit_length() + 1)
    return bits


def _pack(p: Polynomial, bits: int) -> dict:
    out = {}
    for e, c in p.items():
        key = 0
        for i, k in enumerate(e):
            key |= k << (bits * i)
        out[key] = c
    return out


def _unpack(d: dict, nvars: int, bits: int) -> Polynomial:
    mask = (1 << bits) - 1
    terms = {}
    for key, c in d.items():
        if c:
            terms[tuple((key >> (bits * i)) & mask for i in range(nvars))] = c
    return Polynomial(terms, nvars)


def _pmul_acc(out: dict, a: dict, b: dict, sign: int):
    get = out.get
    for e1, c1 in a.items():
        c1 = c1 * sign
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = get(e, 0) + c1 * c2


def _prune(d: dict) -> dict:
    return {e: c for e, c in d.items() if c}


def _packed_entries(J: HigherJacobianMatrix):
    key = "__packed__"
    if key not in J._memo:
        bits = _packing(J.source, len(J.rows))
        J._memo[key] = (bits, [[_pack(p, bits) for p in row] for row in J.entries])
    return J._memo[key]


def minor_determinant(J: HigherJacobianMatrix, sel) -> Polynomial:
    """Determinant of the M x M submatrix on the selected columns.

    Laplace expansion along the top remaining row; subdeterminants are cached
    on ``J`` keyed by their column set, so they are shared between minors.
    """
    columns = sel.columns if isinstance(sel, MinorSelection) else tuple(tuple(a) for a in sel)
    M = len(J.rows)
    if len(columns) != M or len(set(columns)) != M:
        raise InputError(f"a maximal minor needs {M} distinct columns")
    idx = sorted(J.column_index(a) for a in columns)
    bits, rows = _packed_entries(J)
    memo = J._memo.setdefault("__laplace__", {})

    def det(mask: int) -> dict:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        k = bin(mask).count("1")
        r = M - k
        row = rows[r]
        out = {}
        pos = 0
        m = mask
        j = 0
        while m:
            if m & 1:
                a = row[j]
                if a:
                    rest = mask & ~(1 << j)
                    sub = det(rest) if rest else {0: 1}
                    if sub:
                        _pmul_acc(out, a, sub, -1 if pos & 1 else 1)
                pos += 1
            m >>= 1
            j += 1
        out = _prune(out)
        memo[mask] = out
        return out

    mask = 0
    for j in idx:
        mask |= 1 << j
    return _unpack(det(mask), J.s, bits)


def _resolve_backend(backend: str) -> str:
    if backend == "auto":
        return "flint" if _flint.available() else "python"
    if backend not in ("flint", "python"):
        raise InputError(f"unknown backend {backend!r}")
    if backend == "flint" and not _flint.available():
        raise InputError("python-flint is not installed")
    return backend


def _masks(ncols: int, M: int):
    for cols in itertools.combinations(range(ncols), M):
        mask = 0
        for j in cols:
            mask |= 1 << j
        yield cols, mask


def all_minor_determinants(J: HigherJacobianMatrix, backend: str = "auto") -> Dict[Tuple[Exponent, ...], Polynomial]:
    """Every maximal minor at once, keyed by its (sorted) column tuple.

    Bottom-up over the rows: layer k holds det(last k rows, T) for every
    column set T of size k that is not identically zero.  Each layer is
    built from the previous one by a top-row Laplace step, so every shared
    subdeterminant is computed exactly once.
    """
    M, ncols = len(J.rows), len(J.cols)
    zero = Polynomial.zero(J.s)
    if _resolve_backend(backend) == "flint":
        _, scale, layer = _flint.minors(J)
        out = {}
        for cols, mask in _masks(ncols, M):
            g = layer.get(mask)
            out[tuple(J.cols[j] for j in cols)] = zero if g is None else _flint.from_flint(g, J.s, scale)
        return out
    bits, rows = _packed_entries(J)
    layer: Dict[int, dict] = {0: {0: 1}}
    for r in range(M - 1, -1, -1):
        row = rows[r]
        support = [j for j in range(ncols) if row[j]]
        nxt: Dict[int, dict] = {}
        for mask, sub in layer.items():
            for j in support:
                bit = 1 << j
                if mask & bit:
                    continue
                sign = -1 if bin(mask & (bit - 1)).count("1") & 1 else 1
                acc = nxt.get(mask | bit)
                if acc is None:
                    acc = nxt[mask | bit] = {}
                _pmul_acc(acc, row[j], sub, sign)
        layer = {}
        for mask, acc in nxt.items():
            acc = _prune(acc)
            if acc:
                layer[mask] = acc
    out = {}
    for cols, mask in _masks(ncols, M):
        packed = layer.get(mask)
        out[tuple(J.cols[j] for j in cols)] = _unpack(packed, J.s, bits) if packed else zero
    return out


def bareiss_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free elimination with exact polynomial division."""
    a = [list(row) for row in matrix]
    m = len(a)
    if m == 0:
        raise InputError("empty matrix")
    nvars = a[0][0].nvars
    sign = 1
    prev = Polynomial.constant(1, nvars)
    for k in range(m - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, m) if a[i][k]), None)
            if swap is None:
                return Polynomial.zero(nvars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[m - 1][m - 1]
    return -det if sign < 0 else det


# -- the minors ideal -------------------------------------------------------


@dataclass(frozen=True)
class MinorRecord:
    selection: MinorSelection
    determinant: Polynomial
    generator: Polynomial
    c: Optional[int]
    predicted: Optional[int]

    @property
    def degree(self) -> Optional[int]:
        """Weighted degree of a nonzero minor; None for a zero minor."""
        return None if self.determinant.is_zero() else self.predicted


@dataclass(frozen=True)
class MinorsIdeal:
    f: Polynomial
    n: int
    weights: Optional[WeightSystem]
    records: Tuple[MinorRecord, ...]

    @property
    def generators(self) -> List[Polynomial]:
        """Distinct nonzero normalized minors, in selection order."""
        seen = set()
        out = []
        for r in self.records:
            if r.generator and r.generator not in seen:
                seen.add(r.generator)
                out.append(r.generator)
        return out


def normalize_generator(p: Polynomial) -> Polynomial:
    """Content 1 and positive leading coefficient (graded lex)."""
    if not p:
        return p
    q = p.primitive()
    lead = max(q.exponents(), key=lambda e: (sum(e), e))
    return -q if q.coeff(lead) < 0 else q


def require_homogeneous(f: Polynomial, w: WeightSystem) -> int:
    """Weighted degree of f under w; InputError naming stray terms otherwise."""
    if len(w) != f.nvars:
        raise InputError(f"{len(w)} weights given for a polynomial in {f.nvars} variables")
    if f.is_zero():
        raise InputError("the zero polynomial has no weighted degree")
    degs: Dict[int, List[Exponent]] = {}
    for e in f.exponents():
        degs.setdefault(w.degree(e), []).append(e)
    if len(degs) == 1:
        return next(iter(degs))
    # blame the terms outside the degree class holding most terms (ties: highest degree)
    main = max(degs, key=lambda d: (len(degs[d]), d))
    offending = sorted(e for d, es in degs.items() if d != main for e in es)
    names = ", ".join(format_polynomial(Polynomial.monomial(e, f.coeff(e))) for e in offending)
    raise NotWeightedHomogeneous(
        f"{format_polynomial(f)} is not weighted homogeneous for weights {w.weights}: "
        f"terms of degree {main} dominate, offending terms: {names}",
        reason="inconsistent",
        offending=offending,
    )


def _chunk_worker(args):
    f_terms, nvars, n, chunk = args
    J = build_jacobian(Polynomial(f_terms, nvars), n)
    return [(cols, minor_determinant(J, cols).terms) for cols in chunk]


def compute_minors(J: HigherJacobianMatrix, jobs: int = 1,
                   backend: str = "auto") -> Dict[Tuple[Exponent, ...], Polynomial]:
    """All maximal minors; ``jobs > 1`` shards the selections over processes.

    Each worker keeps its own subdeterminant cache; the merged result is
    identical to the sequential one.
    """
    if jobs <= 1:
        return all_minor_determinants(J, backend)
    M = len(J.rows)
    selections = list(itertools.combinations(J.cols, M))
    size = max(1, -(-len(selections) // (jobs * 4)))
    chunks = [selections[i:i + size] for i in range(0, len(selections), size)]
    f = J.source
    out = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_chunk_worker, [(f.terms, f.nvars, J.n, c) for c in chunks]):
            for cols, terms in part:
                out[cols] = Polynomial(terms, f.nvars)
    return {cols: out[cols] for cols in selections}


def minors_ideal(f: Polynomial, n: int, w: Optional[WeightSystem] = None, jobs: int = 1,
                 backend: str = "auto") -> MinorsIdeal:
    d = require_homogeneous(f, w) if w is not None else None
    J = build_jacobian(f, n)
    dets = compute_minors(J, jobs, backend)
    records = []
    for cols, det in dets.items():
        sel = MinorSelection(cols, f.nvars, n)
        c = sel.c(w) if w is not None else None
        records.append(MinorRecord(
            selection=sel,
            determinant=det,
            generator=normalize_generator(det),
            c=c,
            predicted=None if w is None else d * len(J.rows) - c,
        ))
    return MinorsIdeal(f=f, n=n, weights=w, records=tuple(records))


@dataclass
class TheoremAReport:
    f: Polynomial
    weights: WeightSystem
    n: int
    degree: int
    checked: int = 0
    nonzero: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_theorem_a(f: Polynomial, w: WeightSystem, n: int, jobs: int = 1,
                     ideal: Optional[MinorsIdeal] = None, backend: str = "auto") -> TheoremAReport:
    """Check that every maximal minor is zero or homogeneous of degree dM - c.

    With the flint backend the determinants never leave flint: homogeneity
    of degree D is tested through the Euler identity E(g) = D*g, and only
    offending minors are converted back for the report.
    """
    d = require_homogeneous(f, w)
    report = TheoremAReport(f=f, weights=w, n=n, degree=d)
    if ideal is None and jobs <= 1 and _resolve_backend(backend) == "flint":
        J = build_jacobian(f, n)
        M = len(J.rows)
        ctx, scale, layer = _flint.minors(J)
        col_w = [dot(a, w.weights) for a in J.cols]
        rows_w = row_weight_sum(f.nvars, n, w.weights)
        for cols, mask in _masks(len(J.cols), M):
            report.checked += 1
            g = layer.get(mask)
            if g is None:
                continue
            report.nonzero += 1
            predicted = d * M - (sum(col_w[j] for j in cols) - rows_w)
            if _flint.euler_defect(g, ctx, w.weights, predicted) != 0:
                wd = _flint.from_flint(g, f.nvars).weighted_degree(w)
                report.violations.append({
                    "columns": tuple(J.cols[j] for j in cols),
                    "predicted": predicted,
                    "observed": (wd.low, wd.high),
                })
        return report
    ideal = ideal or minors_ideal(f, n, w, jobs=jobs, backend=backend)
    for rec in ideal.records:
        report.checked += 1
        if rec.determinant.is_zero():
            continue
        report.nonzero += 1
        wd = rec.determinant.weighted_degree(w)
        if not wd.homogeneous or wd.low != rec.predicted:
            report.violations.append({
                "columns": rec.selection.columns,
                "predicted": rec.predicted,
                "observed": (wd.low, wd.high),
            })
    return report


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NASHJAC_JOBS", "1")))
    except ValueError:
        return 1
