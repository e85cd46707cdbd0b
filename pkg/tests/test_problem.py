import pytest

from gwdeg.errors import InvalidField, ParseError, UnknownSymbol
from gwdeg.problem import load_problem, parse_base_field

from conftest import all_fixture_names, load_fixture


def test_all_fixtures_load():
    names = all_fixture_names()
    assert len(names) >= 12
    for name in names:
        prob = load_fixture(name)
        assert prob.points
        assert len(prob.polynomials) == len(prob.variables)


def test_base_fields():
    assert repr(parse_base_field("QQ")) == "QQ"
    assert repr(parse_base_field("GF(7)")) == "GF(7)"
    assert repr(parse_base_field("F_5")) == "GF(5)"
    with pytest.raises(ParseError):
        parse_base_field("RR")


def test_extension_by_coefficient_list():
    text = """
field: QQ
variables: [x]
polynomials: ["x^2 + 1"]
points:
  - extension: {generator: i, min_poly: [1, 0, 1]}
    coords: [i]
"""
    prob = load_problem(text)
    assert prob.points[0].residue_field.degree == 2
    assert prob.seed == 0
    assert not prob.complete


def test_parse_error_location():
    text = "field: QQ\nvariables: [x]\npolynomials:\n  - x^^2\n"
    with pytest.raises(ParseError) as exc:
        load_problem(text, "demo.yaml")
    assert exc.value.line == 4
    assert "column 7" in str(exc.value)
    assert "demo.yaml" in str(exc.value)


def test_unknown_symbol_keeps_class():
    text = "field: QQ\nvariables: [x]\npolynomials:\n  - x + w\n"
    with pytest.raises(UnknownSymbol):
        load_problem(text)


def test_missing_key():
    with pytest.raises(ParseError):
        load_problem("field: QQ\nvariables: [x]\n")


def test_bad_yaml():
    with pytest.raises(ParseError):
        load_problem("field: [QQ\n")


def test_coordinate_count():
    text = "field: QQ\nvariables: [x, y]\npolynomials: [x, y]\npoints:\n  - coords: ['0']\n"
    with pytest.raises(ParseError):
        load_problem(text)


def test_too_many_polynomials():
    with pytest.raises(ParseError):
        load_problem("field: QQ\nvariables: [x]\npolynomials: [x, x^2]\n")


def test_reducible_extension_is_math_error():
    text = """
field: QQ
variables: [x]
polynomials: ["x^2 - 1"]
points:
  - extension: {generator: t, min_poly: "t^2 - 1"}
    coords: [t]
"""
    with pytest.raises(InvalidField):
        load_problem(text)


def test_seed_and_non_monic_min_poly():
    text = """
field: GF(5)
variables: [x]
polynomials: ["x^2 - 2"]
seed: 9
points:
  - extension: {generator: a, min_poly: "3*a^2 - 6"}
    coords: [a]
"""
    prob = load_problem(text)
    assert prob.seed == 9
    assert str(prob.points[0].residue_field) == "GF(5)[a]/(a^2 + 3)"
