import pytest

from gwdeg.errors import ParseError, UnknownSymbol
from gwdeg.fields import FieldDescriptor
from gwdeg.parser import parse_constant, parse_polynomial, tokenize
from gwdeg.poly import MultiPoly

QQ = FieldDescriptor.rationals()


def test_precedence_and_unary():
    x = MultiPoly.variable(QQ, ("x",), "x")
    assert parse_polynomial("-x^2", ("x",), QQ) == -(x * x)
    assert parse_polynomial("2*x^3 - (x - 1)^2", ("x",), QQ) == 2 * x ** 3 - (x - 1) ** 2
    assert parse_polynomial("1 - -x", ("x",), QQ) == 1 + x


def test_generator_bound_automatically():
    K = QQ.extend("i", [1, 0, 1])
    assert parse_constant("i^2", K) == -1
    assert parse_constant("(1 + i)/2", K) == (1 + K.gen) / 2


def test_double_caret_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x^^2", ("x",), QQ)
    assert exc.value.position == 2
    assert "column 3" in str(exc.value)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("2x", ("x",), QQ)
    assert exc.value.position == 1


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol):
        parse_polynomial("x + w", ("x",), QQ)


@pytest.mark.parametrize(
    "text", ["", "x +", "(x", "x)", "x^-1", "x^y", "x / y", "1/0", "x $ 1", "x^2.5"]
)
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, ("x", "y"), QQ)


def test_division_by_constant():
    p = parse_polynomial("x/2 + 1/3", ("x",), QQ)
    assert str(p) == "1/2*x + 1/3"


def test_tokenize_positions():
    toks = tokenize(" x1 +  23")
    assert toks[:3] == [("sym", "x1", 1), ("op", "+", 4), ("int", "23", 7)]


def test_variable_clashing_with_generator():
    K = QQ.extend("t", [1, 0, 1])
    with pytest.raises(ParseError):
        parse_polynomial("t", ("t",), K)
