from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nashjac.errors import NotWeightedHomogeneous
from nashjac.parse import ParseError, infer_weights, parse_polynomial, parse_weights, parse_with_names
from nashjac.poly import Polynomial, format_polynomial

NV = 3
polys = st.dictionaries(
    st.tuples(*[st.integers(0, 5)] * NV),
    st.fractions(max_denominator=7).filter(lambda q: abs(q) < 50),
    max_size=6,
).map(lambda d: Polynomial(d, NV))


@given(polys, st.booleans())
def test_format_then_parse_round_trips(p, aliases):
    names = ("x", "y", "z") if aliases else ("x1", "x2", "x3")
    text = format_polynomial(p, names)
    q, _ = parse_with_names(text)
    pad = (0,) * (NV - q.nvars)
    assert Polynomial({e[:NV] + pad: c for e, c in q.items()}, NV) == p


def test_aliases_and_indexed_agree():
    a = parse_polynomial("x^2*y - 3/4*z")
    b = parse_polynomial("x1^2*x2 - 3/4*x3")
    assert a == b
    assert a.coeff((0, 0, 1)) == Fraction(-3, 4)


def test_names_follow_input_notation():
    assert parse_with_names("x^3 - y^2")[1] == ("x", "y")
    assert parse_with_names("x1^3 - x2^2")[1] == ("x1", "x2")


def test_leading_sign_and_repeated_factors():
    assert parse_polynomial("-x*x + 2*x^2") == parse_polynomial("x^2")


@pytest.mark.parametrize("text,col", [("x^2 +", 6), ("x^^2", 3), ("x $ y", 3), ("1/0*x", 3), ("x0", 1)])
def test_errors_carry_positions(text, col):
    with pytest.raises(ParseError) as err:
        parse_polynomial(text)
    assert err.value.line == 1
    assert err.value.column == col


def test_exponent_overflow():
    with pytest.raises(ParseError, match="overflow"):
        parse_polynomial("x^10001")


def test_infer_weights_of_cusp():
    w, d = infer_weights(parse_polynomial("x^3 - y^2"))
    assert w.weights == (2, 3) and d == 6


def test_infer_weights_rejects_non_homogeneous():
    with pytest.raises(NotWeightedHomogeneous) as err:
        infer_weights(parse_polynomial("x^3 + x*y + y^3 + x^2"))
    assert err.value.reason == "no-positive-solution"


def test_infer_weights_needs_a_unique_answer():
    with pytest.raises(NotWeightedHomogeneous) as err:
        infer_weights(parse_polynomial("x^2*y"))
    assert err.value.reason == "not-unique"


def test_parse_weights():
    assert parse_weights("3,2").weights == (3, 2)
    with pytest.raises(ValueError):
        parse_weights("3,a")
