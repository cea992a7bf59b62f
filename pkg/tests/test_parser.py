import random

import pytest

from hochschild.algebra.coeff import QQ, CoefficientField, RatFun
from hochschild.algebra.groebner import buchberger
from hochschild.algebra.parser import format_coefficient, format_monomial, parse_polynomial
from hochschild.algebra.poly import Ambient
from hochschild.exceptions import FieldMismatch, ParseError, SpecializationPole, UnknownVariable

from .conftest import CUBIC, random_polynomial


def test_parse_and_print(ambient):
    p = ambient.parse("z1^2 - 1/2*z2 + q^-1*z3")
    assert str(p) == "z1^2-1/2*z2+q^-1*z3"
    assert p.coefficient((0, 0, 1)) == RatFun.q(-1)
    assert p.coefficient((0, 1, 0)) == RatFun.constant(-1) / 2


def test_products_collect(ambient):
    assert ambient.parse("2*z1*z1*q*q") == ambient.parse("2*q^2*z1^2")
    assert str(ambient.parse("z1 - z1")) == "0"
    assert str(ambient.parse("-q")) == "-q"
    assert str(ambient.parse("3")) == "3"
    assert str(ambient.parse("+z2")) == "z2"


def test_q_power_coefficients_split(ambient):
    p = ambient.parse("q^2*z1 + 2*z1 - q^-3*z1")
    assert len(p) == 1
    assert str(p) == "q^2*z1+2*z1-q^-3*z1"
    assert ambient.parse(str(p)) == p


def test_parentheses_rejected(ambient):
    with pytest.raises(ParseError) as info:
        ambient.parse("(z1+z2)^2")
    assert info.value.position == 0
    assert info.value.expected == ("number", "q", "variable")


def test_parentheses_only_enclose_coefficients(ambient):
    with pytest.raises(ParseError) as info:
        ambient.parse("z1*(z2+z3)")
    assert info.value.position == 3
    with pytest.raises(ParseError) as info:
        ambient.parse("(q+1)^2*z1")
    assert info.value.position == 5
    with pytest.raises(ParseError) as info:
        ambient.parse("(1)/(q-q)*z1")
    assert info.value.position == 4


def test_rational_function_coefficients_round_trip(ambient):
    c = RatFun((1,), (1, 1))
    p = ambient.parse("z1").scale(c) + ambient.parse("z2").scale(RatFun((0, -3), (1, 0, 2)))
    text = str(p)
    assert text == "(1)/(q+1)*z1+(-3/2*q)/(q^2+1/2)*z2"
    assert ambient.parse(text) == p
    assert ambient.parse("2*(q)/(q^2+1)-z3").coefficient((0, 0, 0)) == RatFun((0, 2), (1, 0, 1))


def test_rational_function_coefficient_at_a_pole():
    with pytest.raises(SpecializationPole):
        Ambient(field=CoefficientField.parse("Qq@-1")).parse("(1)/(q+1)*z1")
    assert str(Ambient(field=CoefficientField.parse("Qq@1")).parse("(1)/(q+1)*z1")) == "1/2*z1"


def test_implicit_product_rejected(ambient):
    with pytest.raises(ParseError) as info:
        ambient.parse("z1 z2")
    assert info.value.position == 3
    assert info.value.expected == ("*", "+", "-", "end")


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("   ", 3), ("z1+", 3), ("z1^", 3), ("1/0", 2), ("z1 # z2", 3), ("z1*-z2", 3)],
)
def test_parse_errors_report_position(ambient, text, position):
    with pytest.raises(ParseError) as info:
        ambient.parse(text)
    assert info.value.position == position
    assert f"at position {position}" in str(info.value)


def test_unknown_variable(ambient):
    with pytest.raises(UnknownVariable):
        ambient.parse("z4 + z1")


def test_q_outside_parameter_field():
    with pytest.raises(FieldMismatch):
        Ambient(field=QQ).parse("q*z1")


def test_pole_at_specialization():
    ambient = Ambient(field=CoefficientField.parse("Qq@0"))
    with pytest.raises(SpecializationPole):
        ambient.parse("q^-1*z1")
    assert str(ambient.parse(CUBIC)) == "z1^3+z2^3+z3^3"


def test_specialized_coefficients(ambient_q2):
    assert str(ambient_q2.parse(CUBIC)) == "z1^3+6*z1*z2*z3+z2^3+z3^3"
    assert str(ambient_q2.parse("q^-1*z1")) == "1/2*z1"


def test_custom_variables():
    ambient = Ambient(("x", "y_2"), QQ)
    p = parse_polynomial("x^2*y_2 - 3/4", ambient)
    assert str(p) == "x^2*y_2-3/4"


def test_groebner_output_reparses(ambient, gradient_basis):
    for g in gradient_basis:
        assert ambient.parse(str(g)) == g


def test_format_helpers():
    assert format_monomial((0, 0, 0), ("z1", "z2", "z3")) == "1"
    assert format_monomial((2, 0, 1), ("z1", "z2", "z3")) == "z1^2*z3"
    assert format_coefficient(RatFun.q(-2) * 3 + 1) == "1+3*q^-2"
    assert format_coefficient(RatFun((1,), (1, 1))) == "(1)/(q+1)"
    assert format_coefficient(RatFun.constant(0)) == "0"


@pytest.mark.parametrize("field", ["Q", "Qq", "Qq@-2", "Qq@1/3"])
@pytest.mark.parametrize("seed", range(8))
def test_printed_polynomials_parse_back(field, seed):
    ambient = Ambient(field=CoefficientField.parse(field))
    rng = random.Random(seed)
    p = random_polynomial(rng, ambient, terms=5)
    assert ambient.parse(str(p)) == p
