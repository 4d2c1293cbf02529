"""Groebner bases and the graded Artinian quotient Q[x]/<f, J_n(f)>.

The monomial order compares weighted degree first and breaks ties
lexicographically along a variable priority list.  For a weighted homogeneous
ideal the standard monomials are then a homogeneous basis of the quotient, so
counting them per degree gives the weighted Hilbert function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputError, NotIsolatedError
from .jacobian import minors_ideal, require_homogeneous
from .poly import Exponent, Polynomial, WeightSystem, divides, dot


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree, then lex along ``priority`` (default x1 > x2 > ...)."""

    weights: WeightSystem
    priority: Tuple[int, ...] = ()

    def __post_init__(self):
        s = len(self.weights)
        prio = tuple(self.priority) or tuple(range(s))
        if sorted(prio) != list(range(s)):
            raise InputError(f"priority {prio} is not a permutation of the {s} variables")
        object.__setattr__(self, "priority", prio)

    def key(self, e: Sequence[int]):
        return (dot(e, self.weights.weights), tuple(e[i] for i in self.priority))

    def reversed_tiebreak(self) -> "MonomialOrder":
        return MonomialOrder(self.weights, tuple(reversed(self.priority)))


def leading_term(p: Polynomial, order: MonomialOrder) -> Tuple[Exponent, object]:
    if not p:
        raise InputError("the zero polynomial has no leading term")
    e = max(p.exponents(), key=order.key)
    return e, p.coeff(e)


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, c = leading_term(p, order)
    return p if c == 1 else p.scale(Fraction(1) / c)


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(p: Polynomial, basis: Sequence[Polynomial], leads: Sequence[Exponent],
            order: MonomialOrder) -> Polynomial:
    """Full reduction of p by monic polynomials with the given leading exponents."""
    work = dict(p.items())
    rem = {}
    key = order.key
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for g, lt in zip(basis, leads):
            if divides(lt, e):
                shift = tuple(x - y for x, y in zip(e, lt))
                for ge, gc in g.items():
                    if ge == lt:
                        continue
                    t = tuple(x + y for x, y in zip(ge, shift))
                    v = work.get(t, 0) - c * gc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[e] = c
    return Polynomial(rem, p.nvars)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    leads: Tuple[Exponent, ...]
    reduced: bool = True

    def normal_form(self, p: Polynomial) -> Polynomial:
        return _reduce(p, self.elements, self.leads, self.order)

    @property
    def is_unit(self) -> bool:
        return any(not any(e) for e in self.leads)


def _spoly(f: Polynomial, lf: Exponent, g: Polynomial, lg: Exponent) -> Polynomial:
    m = _lcm(lf, lg)
    return f.mul_term(tuple(x - y for x, y in zip(m, lf))) - g.mul_term(tuple(x - y for x, y in zip(m, lg)))


def groebner(gens: Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are taken smallest lcm first.  Coprime leading monomials and the
    chain criterion skip pairs whose S-polynomial is known to reduce to zero.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise InputError("need at least one nonzero generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise InputError("generators live in different polynomial rings")
    if len(order.weights) != nvars:
        raise InputError("monomial order and generators disagree on the variable count")

    basis: List[Polynomial] = []
    leads: List[Exponent] = []
    # seed with inter-reduced inputs, smallest first
    for g in sorted(gens, key=lambda p: order.key(leading_term(p, order)[0])):
        r = _reduce(g, basis, leads, order)
        if r:
            r = _monic(r, order)
            basis.append(r)
            leads.append(leading_term(r, order)[0])

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (order.key(_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        m = _lcm(li, lj)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if any(
            k != i and k != j and divides(leads[k], m)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        r = _reduce(_spoly(basis[i], li, basis[j], lj), basis, leads, order)
        if r:
            r = _monic(r, order)
            basis.append(r)
            leads.append(leading_term(r, order)[0])
            k = len(basis) - 1
            pairs.update((a, k) for a in range(k))

    # minimalise, then inter-reduce the tails
    keep = [
        i for i, lt in enumerate(leads)
        if not any(divides(leads[k], lt) and (leads[k] != lt or k < i) for k in range(len(leads)) if k != i)
    ]
    basis = [basis[i] for i in keep]
    leads = [leads[i] for i in keep]
    final = []
    for i, g in enumerate(basis):
        others = [b for k, b in enumerate(basis) if k != i]
        other_leads = [lt for k, lt in enumerate(leads) if k != i]
        lt = leads[i]
        tail = _reduce(g - Polynomial.monomial(lt), others, other_leads, order)
        final.append(tail + Polynomial.monomial(lt))
    pairs_sorted = sorted(zip(final, leads), key=lambda t: order.key(t[1]))
    return GroebnerBasis(
        order=order,
        elements=tuple(p for p, _ in pairs_sorted),
        leads=tuple(lt for _, lt in pairs_sorted),
    )


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(p)


def s_polynomials_reduce(G: GroebnerBasis) -> bool:
    """Buchberger's criterion on every pair of basis elements."""
    els = G.elements
    for j in range(len(els)):
        for i in range(j):
            s = _spoly(els[i], G.leads[i], els[j], G.leads[j])
            if G.normal_form(s):
                return False
    return True


# -- the quotient -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """Standard-monomial basis of a graded Artinian quotient."""

    groebner: GroebnerBasis
    basis: Tuple[Exponent, ...]
    degrees: Tuple[int, ...]
    generators: Tuple[Polynomial, ...]
    f: Optional[Polynomial] = None
    n: Optional[int] = None
    _index: Dict[Exponent, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index.update({e: i for i, e in enumerate(self.basis)})

    @property
    def order(self) -> MonomialOrder:
        return self.groebner.order

    @property
    def weights(self) -> WeightSystem:
        return self.groebner.order.weights

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def socle(self) -> Optional[int]:
        """Top weighted degree; None for the zero algebra."""
        return max(self.degrees) if self.degrees else None

    @property
    def graded_dims(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def index(self, e: Exponent) -> int:
        return self._index[tuple(e)]

    def basis_of_degree(self, k: int) -> List[Exponent]:
        return [e for e, d in zip(self.basis, self.degrees) if d == k]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return self.groebner.normal_form(p)

    def coordinates(self, p: Polynomial) -> List:
        """Coefficient vector of p's normal form in the standard basis."""
        v = [0] * self.dimension
        for e, c in self.normal_form(p).items():
            v[self._index[e]] = c
        return v

    def element(self, coords: Sequence) -> Polynomial:
        return Polynomial({e: c for e, c in zip(self.basis, coords) if c}, self.nvars)


def standard_monomials(G: GroebnerBasis) -> List[Exponent]:
    """Monomials outside the leading-term ideal; NotIsolatedError if infinite."""
    s = len(G.order.weights)
    if G.is_unit:
        return []
    for i in range(s):
        if not any(lt[i] > 0 and all(x == 0 for k, x in enumerate(lt) if k != i) for lt in G.leads):
            raise NotIsolatedError(
                f"no power of x{i + 1} lies in the leading-term ideal: the quotient is infinite "
                "dimensional, so the singularity is not isolated"
            )
    seen = {(0,) * s}
    queue = deque([(0,) * s])
    out = []
    while queue:
        e = queue.popleft()
        if any(divides(lt, e) for lt in G.leads):
            continue
        out.append(e)
        for i in range(s):
            nxt = e[:i] + (e[i] + 1,) + e[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(out, key=G.order.key)


def quotient_by(gens: Sequence[Polynomial], order: MonomialOrder, f: Optional[Polynomial] = None,
                n: Optional[int] = None) -> QuotientAlgebra:
    """Quotient of the polynomial ring by the ideal the (homogeneous) ``gens`` span."""
    w = order.weights
    for g in gens:
        if g and not g.weighted_degree(w).homogeneous:
            raise InputError(f"generator {g} is not weighted homogeneous for {w.weights}")
    G = groebner(gens, order)
    basis = standard_monomials(G)
    return QuotientAlgebra(
        groebner=G,
        basis=tuple(basis),
        degrees=tuple(dot(e, w.weights) for e in basis),
        generators=tuple(g for g in gens if g),
        f=f,
        n=n,
    )


def nash_ideal_generators(f: Polynomial, n: int, w: WeightSystem, jobs: int = 1,
                          backend: str = "auto") -> List[Polynomial]:
    """f followed by the distinct nonzero normalized maximal minors."""
    ideal = minors_ideal(f, n, w, jobs=jobs, backend=backend)
    gens = [f]
    seen = {f}
    for g in ideal.generators:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    return gens


def quotient_algebra(f: Polynomial, n: int, w: WeightSystem, order: Optional[MonomialOrder] = None,
                     jobs: int = 1, backend: str = "auto") -> QuotientAlgebra:
    """The local algebra Q[x]/<f, J_n(f)> with its weighted grading."""
    require_homogeneous(f, w)
    order = order or MonomialOrder(w)
    if order.weights != w:
        raise InputError("monomial order weights differ from the grading weights")
    return quotient_by(nash_ideal_generators(f, n, w, jobs, backend), order, f=f, n=n)


def hilbert_function(Q: QuotientAlgebra) -> Dict[int, int]:
    return Q.graded_dims
