import pytest
from hypothesis import given

from generators import polynomials
from lgmorita.errors import ParseError, UnknownToken
from lgmorita.ring import Polynomial, Variable
from lgmorita.text import parse_polynomial, print_polynomial


def test_examples_parse():
    x, y, z = (Polynomial.var(n) for n in "xyz")
    assert parse_polynomial("-x^2+1") == 1 - x * x
    assert parse_polynomial("x*y + x*z^2 + y*z^2") == x * y + x * z * z + y * z * z
    assert parse_polynomial("x + -x").is_zero()


def test_printing():
    assert print_polynomial(Polynomial.zero()) == "0"
    assert print_polynomial(parse_polynomial("y^2 + x^2")) == "x^2 + y^2"
    assert print_polynomial(Polynomial.var("x", 1)) == "x'"
    assert print_polynomial(parse_polynomial("1 - x^2")) == "-x^2 + 1"
    assert print_polynomial(parse_polynomial("-(3/4)*y' + 1/2*x^2")) == "1/2*x^2 - 3/4*y'"


def test_precedence_and_grouping():
    x = Polynomial.var("x")
    assert parse_polynomial("-x^2") == -(x * x)
    assert parse_polynomial("2*(x+1)^2") == 2 * (x + 1) ** 2
    assert parse_polynomial("x1''") == Polynomial.var(Variable("x1", 2))
    assert parse_polynomial("--x") == x


@pytest.mark.parametrize("text", ["x^", "x +", "(x + 1", "x y", "x^-1", ""])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert isinstance(info.value, SyntaxError)
    assert info.value.position is not None


def test_unknown_token():
    with pytest.raises(UnknownToken) as info:
        parse_polynomial("x $ y")
    assert info.value.position == 2


@given(polynomials(primes=True))
def test_print_then_parse_is_identity(p):
    text = print_polynomial(p)
    assert parse_polynomial(text) == p
    assert print_polynomial(parse_polynomial(text)) == text
