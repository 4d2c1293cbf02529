from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nashjac.poly import Polynomial, WeightSystem, format_polynomial, multi_binom

from oracles import from_sympy, to_sympy

NV = 2
exps = st.tuples(*[st.integers(0, 4)] * NV)
coeffs = st.one_of(st.integers(-5, 5), st.fractions(max_denominator=4).filter(lambda q: abs(q) < 6))
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: Polynomial(d, NV))
deltas = st.tuples(*[st.integers(0, 3)] * NV)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(NV)


@given(polys, polys)
def test_product_matches_sympy(p, q):
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q), NV)


@given(polys, polys, st.integers(0, NV - 1))
def test_leibniz_rule(p, q, i):
    assert (p * q).diff(i) == p.diff(i) * q + p * q.diff(i)


@given(polys, deltas, deltas)
def test_divided_partials_compose_with_binomial(p, a, b):
    # D^(a) D^(b) = binom(a+b, a) D^(a+b)
    both = tuple(x + y for x, y in zip(a, b))
    lhs = p.divided_partial(b).divided_partial(a)
    assert lhs == p.divided_partial(both).scale(multi_binom(both, a))


@given(st.tuples(st.integers(1, 4), st.integers(1, 4)), st.data())
def test_products_of_homogeneous_are_homogeneous(w, data):
    ws = WeightSystem(w)
    def hom(d):
        mons = [(i, (d - i * w[0]) // w[1]) for i in range(d // w[0] + 1) if (d - i * w[0]) % w[1] == 0]
        return mons
    d1, d2 = data.draw(st.integers(1, 10)), data.draw(st.integers(1, 10))
    m1, m2 = hom(d1), hom(d2)
    if not m1 or not m2:
        return
    p = Polynomial({e: 1 for e in m1}, 2)
    q = Polynomial({e: 2 for e in m2}, 2)
    wd = (p * q).weighted_degree(ws)
    assert wd.homogeneous and wd.degree == d1 + d2


def test_weighted_degree_reports_both_ends():
    p = Polynomial({(3, 0): 1, (0, 1): 1}, 2)
    wd = p.weighted_degree(WeightSystem((1, 1)))
    assert (wd.low, wd.high) == (1, 3)
    assert not wd.homogeneous


def test_coefficients_stay_exact():
    p = Polynomial({(1, 0): Fraction(1, 3)}, 2) * 3
    assert p.coeff((1, 0)) == 1 and isinstance(p.coeff((1, 0)), int)


def test_exact_division_and_failure():
    x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)
    f = x**3 - y**2
    assert (f * (x + y)).exact_div(x + y) == f
    with pytest.raises(ArithmeticError):
        f.exact_div(x)


def test_formatting_in_input_notation():
    x, y = Polynomial.var(0, 2), Polynomial.var(1, 2)
    assert format_polynomial(x**3 - y**2) == "x^3 - y^2"
    assert format_polynomial(x**3 - y**2, ("x1", "x2")) == "x1^3 - x2^2"
    assert format_polynomial(Polynomial.zero(2)) == "0"


def test_weights_must_be_positive():
    with pytest.raises(ValueError):
        WeightSystem((1, 0))
