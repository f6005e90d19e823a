from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from divode.diffop import BasisTerm
from divode.errors import ParseError
from divode.expr import parse_rhs_expression, render_term_body, render_terms

from conftest import rationals


def T(power, alpha, beta=0, kind="exp"):
    return BasisTerm(power, F(alpha), F(beta), kind)


@pytest.mark.parametrize("text, expected", [
    ("exp(x)*sin(x) - 2*exp(x)*cos(x)", [(1, T(0, 1, 1, "sin")), (-2, T(0, 1, 1, "cos"))]),
    ("exp(1/2 x)", [(1, T(0, F(1, 2)))]),
    ("3*x^2*exp(-x)*cos(2x)", [(3, T(2, -1, 2, "cos"))]),
    ("4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)", [(4, T(0, 2, 3, "sin")), (2, T(0, 2, 3, "cos"))]),
    ("  - x ^ 3 + 5 ", [(-1, T(3, 0)), (5, T(0, 0))]),
    ("0.5 x exp(x)", [(F(1, 2), T(1, 1))]),
    ("(-1/3)*exp((1/2)x)", [(F(-1, 3), T(0, F(1, 2)))]),
    ("x*x*exp(x)*exp(x)", [(1, T(2, 2))]),
    ("sin(-2x)", [(-1, T(0, 0, 2, "sin"))]),
    ("cos(0x)", [(1, T(0, 0))]),
    ("exp(x) - exp(x)", []),
    ("0", []),
])
def test_parse_examples(text, expected):
    assert parse_rhs_expression(text) == expected


@pytest.mark.parametrize("text, pos", [
    ("sin(x)*cos(x)", 7),
    ("exp(pi x)", 4),
    ("tan(x)", 0),
    ("2 +", 3),
    ("exp(x", 5),
    ("1/0", 1),
    ("x^", 2),
    ("exp(2y)", 5),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_rhs_expression(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


def test_empty_expression_is_an_error():
    for text in ("", "   "):
        with pytest.raises(ParseError):
            parse_rhs_expression(text)


def test_render_examples():
    assert render_term_body(T(1, 2, 3, "sin")) == "x*exp(2x)*sin(3x)"
    assert render_term_body(T(0, F(1, 2))) == "exp((1/2)x)"
    assert render_term_body(T(0, 0)) == ""
    assert render_terms([(F(2, 3), T(0, 1, 1, "sin")), (F(1, 3), T(0, 1, 1, "cos"))]) == \
        "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)"
    assert render_terms([(F(-7, 2), T(0, 0)), (-1, T(0, -1))]) == "-7/2 - exp(-x)"
    assert render_terms([]) == "0"


terms = st.builds(
    lambda p, a, b, kind: T(p, a, 0, "exp") if b == 0 else T(p, a, b, kind),
    st.integers(0, 4), rationals, rationals.map(abs), st.sampled_from(["sin", "cos"]))
sums = st.lists(st.tuples(rationals.filter(bool), terms), max_size=5, unique_by=lambda ct: ct[1])


@given(sums)
def test_render_parse_render_fixpoint(ts):
    text = render_terms(ts)
    parsed = parse_rhs_expression(text)
    assert sorted(parsed, key=repr) == sorted(ts, key=repr)
    assert render_terms(parsed) == text
