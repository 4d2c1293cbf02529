import pytest

from nashjac.algebra import MonomialOrder, quotient_algebra, quotient_by
from nashjac.derivations import (
    Derivation,
    bracket,
    derivation_space,
    euler_derivation,
    has_proof_shape,
    in_span,
    is_derivation,
    verify_theorem_b,
)
from nashjac.errors import HypothesisError
from nashjac.parse import parse_polynomial
from nashjac.poly import Polynomial, WeightSystem

from oracles import dense_derivation_dims

x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)


def test_x_squared_y_quotient():
    W = WeightSystem((2, 3))
    Q = quotient_by([x**2, y], MonomialOrder(W))
    space = derivation_space(Q)
    assert {k: d for k, d in space.dims.items() if d} == {0: 1}
    (D,) = space.components[0]
    assert D.images[1].is_zero()
    assert D.images[0] == x.scale(D.images[0].coeff((1, 0)))


def _quotients():
    cases = [
        ([x**2, y], (2, 3)),
        ([x**3, y**2], (1, 1)),
        ([x**2, y**2], (1, 2)),
        ([x * y, x**3 + y**3], (1, 1)),
    ]
    for gens, w in cases:
        yield quotient_by(gens, MonomialOrder(WeightSystem(w)))
    for text, w, n in [("x^3 - y^2", (2, 3), 1), ("x^2 - y^3", (3, 2), 1), ("x^3 - y^4", (4, 3), 1), ("x^3 - y^2", (2, 3), 2)]:
        yield quotient_algebra(parse_polynomial(text), n, WeightSystem(w))


@pytest.mark.parametrize("Q", list(_quotients()), ids=lambda Q: f"dim{Q.dimension}")
def test_solver_matches_dense_leibniz_oracle(Q):
    assert Q.dimension <= 12
    space = derivation_space(Q)
    assert {k: d for k, d in space.dims.items() if d} == dense_derivation_dims(Q)


@pytest.mark.parametrize("Q", list(_quotients()), ids=lambda Q: f"dim{Q.dimension}")
def test_basis_elements_are_derivations_closed_under_bracket(Q):
    space = derivation_space(Q)
    basis = [D for comp in space.components.values() for D in comp]
    for D in basis:
        assert is_derivation(Q, D)
        assert D.preserves_maximal_ideal()
    for D1 in basis[:6]:
        for D2 in basis[:6]:
            B = bracket(Q, D1, D2)
            assert is_derivation(Q, B)
            assert in_span(Q, B, space.components.get(B.degree, ()))


def test_euler_derivation_in_degree_zero():
    Q = quotient_algebra(parse_polynomial("x^2 - y^3"), 2, WeightSystem((3, 2)))
    space = derivation_space(Q)
    assert in_span(Q, euler_derivation(Q), space.components[0])


def test_parallel_solver_matches_serial():
    Q = quotient_algebra(parse_polynomial("x^3 - y^2"), 2, WeightSystem((2, 3)))
    assert derivation_space(Q, jobs=3).dims == derivation_space(Q).dims


def test_theorem_b_cusp():
    rep = verify_theorem_b(parse_polynomial("x^2 - y^3"), WeightSystem((3, 2)), 3)
    assert rep.passed and rep.euler_in_degree_zero and not rep.flags


def test_theorem_b_flags_n_two():
    rep = verify_theorem_b(parse_polynomial("x^2 - y^3"), WeightSystem((3, 2)), 2)
    assert any("n >= 3" in fl for fl in rep.flags)


@pytest.mark.parametrize("text,w", [("x^3 - y^2", (2, 3)), ("x*y + y^3", (2, 1)), ("x^3 + y^3 + z^3", (1, 1, 1))])
def test_theorem_b_hypotheses(text, w):
    with pytest.raises(HypothesisError):
        verify_theorem_b(parse_polynomial(text), WeightSystem(w), 3)


def test_proof_shape_predicate():
    assert has_proof_shape(Derivation((y**2, Polynomial.zero(2)), -1))
    assert not has_proof_shape(Derivation((x, Polynomial.zero(2)), 0))
    assert not has_proof_shape(Derivation((y, y), 0))
