"""Graded derivations of a weighted homogeneous Artinian quotient.

A derivation of Q = R/I is determined by the images h_i of the variables,
taken modulo I, and it is well defined exactly when sum_i h_i dg/dx_i lies
in I for every generator g of I.  For a fixed shift k the h_i range over the
standard monomials of weighted degree k + w_i, and the constraints are linear
in their coefficients, so each graded piece L_k is the nullspace of a small
exact system.  Constant terms are allowed whenever k + w_i = 0; that the
solutions never use them is checked afterwards rather than imposed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import QuotientAlgebra, quotient_algebra
from .errors import HypothesisError
from .jacobian import require_homogeneous
from .linalg import nullspace, solve_membership
from .poly import Polynomial, WeightSystem


@dataclass(frozen=True)
class Derivation:
    images: Tuple[Polynomial, ...]
    degree: int

    def apply(self, p: Polynomial, Q: Optional[QuotientAlgebra] = None) -> Polynomial:
        out = Polynomial.zero(p.nvars)
        for i, h in enumerate(self.images):
            if h:
                out = out + h * p.diff(i)
        return Q.normal_form(out) if Q is not None else out

    def preserves_maximal_ideal(self) -> bool:
        return all(h.constant_term() == 0 for h in self.images)


@dataclass(frozen=True)
class GradedDerivationSpace:
    quotient: QuotientAlgebra
    components: Dict[int, Tuple[Derivation, ...]]

    def dim(self, k: int) -> int:
        return len(self.components.get(k, ()))

    @property
    def dims(self) -> Dict[int, int]:
        return {k: len(v) for k, v in sorted(self.components.items())}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def negative_components(self) -> Dict[int, int]:
        return {k: d for k, d in self.dims.items() if k < 0 and d}


def degree_range(Q: QuotientAlgebra) -> range:
    """Shifts that can carry a nonzero derivation: [-max(t, w_max), t]."""
    if Q.dimension == 0:
        return range(0)
    t = Q.socle
    low = -max(t, max(Q.weights.weights))
    return range(low, t + 1)


def _unknowns(Q: QuotientAlgebra, k: int) -> List[Tuple[int, tuple]]:
    out = []
    for i, wi in enumerate(Q.weights.weights):
        out.extend((i, e) for e in Q.basis_of_degree(k + wi))
    return out


def _constraint_columns(Q: QuotientAlgebra, unknowns) -> List[List]:
    """Column per unknown: coordinates of NF(x^e * dg/dx_i) for each basis element g."""
    cols = []
    gb = Q.groebner.elements
    partials = [[g.diff(i) for i in range(Q.nvars)] for g in gb]
    for i, e in unknowns:
        col = []
        for dg in partials:
            col.extend(Q.coordinates(dg[i].mul_term(e)))
        cols.append(col)
    return cols


def solve_degree(Q: QuotientAlgebra, k: int) -> Tuple[Derivation, ...]:
    """Basis of the shift-k component L_k."""
    if Q.dimension == 0:
        return ()
    unknowns = _unknowns(Q, k)
    if not unknowns:
        return ()
    cols = _constraint_columns(Q, unknowns)
    nrows = len(cols[0])
    rows = [[cols[j][r] for j in range(len(unknowns))] for r in range(nrows)]
    out = []
    for vec in nullspace(rows, len(unknowns)):
        images = [dict() for _ in range(Q.nvars)]
        for (i, e), c in zip(unknowns, vec):
            if c:
                images[i][e] = c
        out.append(Derivation(tuple(Polynomial(t, Q.nvars) for t in images), k))
    return tuple(out)


def _solve_task(args):
    Q, k = args
    return k, solve_degree(Q, k)


def derivation_space(Q: QuotientAlgebra, jobs: int = 1) -> GradedDerivationSpace:
    ks = list(degree_range(Q))
    if jobs > 1 and len(ks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solved = dict(pool.map(_solve_task, [(Q, k) for k in ks]))
    else:
        solved = {k: solve_degree(Q, k) for k in ks}
    return GradedDerivationSpace(quotient=Q, components={k: solved[k] for k in ks})


def graded_component_dim(Q: QuotientAlgebra, k: int) -> int:
    if Q.dimension == 0 or k not in degree_range(Q):
        return 0
    return len(solve_degree(Q, k))


def has_negative_derivation(Q: QuotientAlgebra, space: Optional[GradedDerivationSpace] = None) -> Optional[Derivation]:
    """A basis derivation of the most negative nonzero component, or None."""
    space = space or derivation_space(Q)
    for k in sorted(space.components):
        if k < 0 and space.components[k]:
            return space.components[k][0]
    return None


def euler_derivation(Q: QuotientAlgebra) -> Derivation:
    n = Q.nvars
    return Derivation(
        tuple(Q.normal_form(Polynomial.var(i, n).scale(w)) for i, w in enumerate(Q.weights.weights)),
        0,
    )


def derivation_vector(Q: QuotientAlgebra, D: Derivation) -> List:
    """Stack of the normal-form coordinates of the images."""
    out = []
    for h in D.images:
        out.extend(Q.coordinates(h))
    return out


def in_span(Q: QuotientAlgebra, D: Derivation, basis: Sequence[Derivation]) -> bool:
    return solve_membership([derivation_vector(Q, b) for b in basis], derivation_vector(Q, D))


def is_derivation(Q: QuotientAlgebra, D: Derivation) -> bool:
    """D maps every Groebner basis element into the ideal."""
    return all(not D.apply(g, Q) for g in Q.groebner.elements)


def bracket(Q: QuotientAlgebra, D1: Derivation, D2: Derivation) -> Derivation:
    """[D1, D2] through the images of the variables."""
    images = tuple(
        Q.normal_form(D1.apply(h2) - D2.apply(h1))
        for h1, h2 in zip(D1.images, D2.images)
    )
    return Derivation(images, D1.degree + D2.degree)


def has_proof_shape(D: Derivation) -> bool:
    """Two variables, h2 = 0 and h1 = c * x2^b with b >= 1."""
    if len(D.images) != 2:
        return False
    h1, h2 = D.images
    if h2 or len(h1) != 1:
        return False
    (e, _), = h1.items()
    return e[0] == 0 and e[1] >= 1


@dataclass
class TheoremBReport:
    f: Polynomial
    weights: WeightSystem
    n: int
    degree: int
    dims: Dict[int, int]
    dimension: int
    socle: Optional[int]
    euler_in_degree_zero: bool
    witness: Optional[Derivation] = None
    witness_has_proof_shape: Optional[bool] = None
    flags: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.witness is None


def check_hypotheses(f: Polynomial, w: WeightSystem) -> int:
    """Raise HypothesisError unless s = 2, w1 >= w2 and d >= 2*w1; return d."""
    if f.nvars != 2:
        raise HypothesisError(f"the non-negativity theorem is for two variables, got {f.nvars}")
    d = require_homogeneous(f, w)
    w1, w2 = w.weights
    if w1 < w2:
        raise HypothesisError(f"weights {w.weights} need w1 >= w2; swap the variables")
    if d < 2 * w1:
        raise HypothesisError(f"need d >= 2*w1, got d={d}, w1={w1}")
    return d


def verify_theorem_b(f: Polynomial, w: WeightSystem, n: int, jobs: int = 1,
                     backend: str = "auto") -> TheoremBReport:
    """Compute every L_k of Der(Q[x]/<f, J_n(f)>) and look for negative shifts."""
    d = check_hypotheses(f, w)
    Q = quotient_algebra(f, n, w, jobs=jobs, backend=backend)
    space = derivation_space(Q, jobs=jobs)
    E = euler_derivation(Q)
    report = TheoremBReport(
        f=f, weights=w, n=n, degree=d,
        dims=space.dims, dimension=Q.dimension, socle=Q.socle,
        euler_in_degree_zero=in_span(Q, E, space.components.get(0, ())),
    )
    if n == 2:
        report.flags.append("outside the n >= 3 hypothesis; the s = n = 2 case is covered by prior work")
    elif n < 3:
        report.flags.append(f"outside the n >= 3 hypothesis (n = {n})")
    witness = has_negative_derivation(Q, space)
    if witness is not None:
        report.witness = witness
        report.witness_has_proof_shape = has_proof_shape(witness)
    return report
