"""Higher-order Jacobian matrices of weighted homogeneous plane and space curves.

The package builds order-n Jacobian matrices, audits the degrees of their
maximal minors, computes the local algebra Q[x]/<f, J_n(f)> and the graded
derivations of that algebra.
"""

from .algebra import MonomialOrder, QuotientAlgebra, groebner, hilbert_function, quotient_algebra
from .bounds import check_homogeneous_bound, check_weighted_bound_s2
from .derivations import derivation_space, has_negative_derivation, verify_theorem_b
from .errors import HypothesisError, InputError, NotIsolatedError, NotWeightedHomogeneous
from .jacobian import (
    HigherJacobianMatrix,
    MinorSelection,
    all_minor_determinants,
    build_jacobian,
    cardinalities,
    enumerate_minor_selections,
    index_sets,
    minor_determinant,
    minors_ideal,
    verify_theorem_a,
)
from .parse import infer_weights, parse_polynomial, parse_weights
from .poly import Polynomial, WeightSystem, format_polynomial

__version__ = "0.1.0"
