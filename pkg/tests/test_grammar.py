import pytest
from hypothesis import given
from hypothesis import strategies as st

from ascyclo.algebra import Poly, RatFunc, field_from_q, format_poly, parse_poly, parse_ratfunc
from ascyclo.errors import ParseError

from conftest import fields, polys, ratfuncs


@given(st.data())
def test_poly_roundtrip(data):
    F = data.draw(fields())
    f = data.draw(polys(F, 6))
    assert parse_poly(F, str(f)) == f


@given(st.data())
def test_ratfunc_roundtrip(data):
    F = data.draw(fields())
    r = data.draw(ratfuncs(F, 4))
    assert parse_ratfunc(F, str(r)) == r


def test_grammar_forms():
    F = field_from_q(4)
    f = parse_poly(F, "(g+1)*T^2 + g*T + 1")
    g = F.generator
    assert f.coeffs == (1, g, F.add(g, 1))
    assert str(f) == "(g+1)*T^2 + g*T + 1"
    assert parse_poly(F, "(g+1) T^2 + g T + 1") == f
    assert parse_poly(F, "  ( g + 1 ) * T ^ 2+g*T+1 ") == f
    F3 = field_from_q(3)
    assert parse_ratfunc(F3, "T^-2") == parse_ratfunc(F3, "1/T^2")
    assert parse_poly(F3, "5") == Poly.constant(F3, 2)
    assert parse_poly(F3, "-T") == Poly(F3, [0, 2])
    assert str(parse_ratfunc(F3, "1/(T^2+T)")) == "1/(T^2 + T)"
    assert str(parse_ratfunc(F3, "2/T")) == "2/T"


@pytest.mark.parametrize("text", ["", "T+", "(T", "T)", "1/0", "T^x", "x", "T^-1^", "0^-1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ratfunc(field_from_q(3), text)


def test_generator_needs_extension_field():
    with pytest.raises(ParseError):
        parse_poly(field_from_q(5), "g*T")


def test_parse_poly_rejects_fraction():
    with pytest.raises(ParseError):
        parse_poly(field_from_q(2), "1/T")


def test_format_zero():
    F = field_from_q(2)
    assert format_poly(Poly.zero(F)) == "0"
    assert str(RatFunc.zero(F)) == "0"
