"""Problem files: a YAML document describing a system and its points.

Example::

    field: QQ                      # or GF(p); or a mapping with an extension
    variables: [x]
    polynomials:
      - x^2 + 1
    seed: 0                        # optional
    complete: true                 # optional: the points exhaust the zero set
    points:
      - name: i-point
        extension: {generator: i, min_poly: "i^2 + 1"}   # omit for rational points
        coords: ["i"]

``min_poly`` is an expression in the generator or a list of base-field
coefficients, constant term first.  Set ``assume_irreducible: true`` inside
an extension to accept a polynomial whose irreducibility cannot be certified.
"""

import re
from dataclasses import dataclass, field as dc_field

import yaml

from .degree import PointSpec
from .errors import ParseError
from .fields import FieldDescriptor
from .parser import parse_constant, parse_polynomial


class Located(str):
    """A string remembering where it sat in the source document."""

    line = None
    column = None


@dataclass
class Problem:
    field: FieldDescriptor
    variables: tuple
    polynomials: list
    points: list
    seed: int = 0
    complete: bool = False
    source: str = None
    texts: list = dc_field(default_factory=list)


def _to_python(node):
    if isinstance(node, yaml.ScalarNode):
        s = Located(node.value)
        s.line = node.start_mark.line + 1
        s.column = node.start_mark.column + (1 if node.style in ("'", '"') else 0)
        return s
    if isinstance(node, yaml.SequenceNode):
        out = [_to_python(n) for n in node.value]
        return _LocatedList(out, node)
    if isinstance(node, yaml.MappingNode):
        return _LocatedDict({str(k.value): _to_python(v) for k, v in node.value}, node)
    raise ParseError("unsupported YAML node")


class _LocatedList(list):
    def __init__(self, items, node):
        super().__init__(items)
        self.line = node.start_mark.line + 1


class _LocatedDict(dict):
    def __init__(self, items, node):
        super().__init__(items)
        self.line = node.start_mark.line + 1


def _fail(message, where=None, source=None, offset=None, cls=ParseError):
    line = getattr(where, "line", None)
    col = getattr(where, "column", None)
    if col is not None and offset is not None:
        col = col + offset
    raise cls(message, col, line, source)


def _expr(text, parse, source):
    try:
        return parse(str(text))
    except ParseError as exc:
        _fail(exc.detail, text, source, exc.position, type(exc))


_GF = re.compile(r"^\s*(?:GF|F)\s*\(\s*(\d+)\s*\)\s*$|^\s*F_?(\d+)\s*$")


def parse_base_field(text, source=None):
    t = str(text).strip()
    if t in ("QQ", "Q", "Rationals"):
        return FieldDescriptor.rationals()
    m = _GF.match(t)
    if m:
        return FieldDescriptor.prime(int(m.group(1) or m.group(2)))
    _fail(f"unknown field {t!r}; expected QQ or GF(p)", text, source)


def parse_extension(base, spec, source=None):
    """An extension of ``base`` from a ``{generator, min_poly}`` mapping."""
    if not isinstance(spec, dict):
        _fail("extension must be a mapping with 'generator' and 'min_poly'", spec, source)
    gen = spec.get("generator")
    mp = spec.get("min_poly")
    if gen is None or mp is None:
        _fail("extension needs 'generator' and 'min_poly'", spec, source)
    gen = str(gen)
    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", gen):
        _fail(f"invalid generator name {gen!r}", spec.get("generator"), source)
    assume = str(spec.get("assume_irreducible", "false")).lower() == "true"
    if isinstance(mp, list):
        coeffs = [_expr(c, lambda s: parse_constant(s, base), source) for c in mp]
    else:
        poly = _expr(mp, lambda s: parse_polynomial(s, (gen,), base), source)
        deg = poly.total_degree()
        coeffs = [poly.coefficient((i,)) for i in range(deg + 1)]
    if coeffs and coeffs[-1] != 0 and coeffs[-1] != 1:
        lead = coeffs[-1]
        coeffs = [c / lead for c in coeffs]
    return base.extend(gen, coeffs, assume_irreducible=assume)


def load_problem(text, source=None):
    try:
        node = yaml.compose(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise ParseError(str(exc.problem), mark.column if mark else None,
                         mark.line + 1 if mark else None, source) from None
    if node is None or not isinstance(node, yaml.MappingNode):
        raise ParseError("problem file must be a mapping", None, 1, source)
    doc = _to_python(node)
    for key in ("field", "variables", "polynomials"):
        if key not in doc:
            _fail(f"missing required key {key!r}", doc, source)
    raw_field = doc["field"]
    if isinstance(raw_field, dict):
        base = parse_base_field(raw_field.get("base", "QQ"), source)
        k = parse_extension(base, raw_field, source) if "generator" in raw_field else base
    else:
        k = parse_base_field(raw_field, source)
    variables = doc["variables"]
    if not isinstance(variables, list) or not variables:
        _fail("'variables' must be a nonempty list", variables, source)
    variables = tuple(str(v) for v in variables)
    if len(set(variables)) != len(variables):
        _fail("duplicate variable names", doc["variables"], source)
    polys = doc["polynomials"]
    if not isinstance(polys, list):
        _fail("'polynomials' must be a list", polys, source)
    # fewer equations than variables is a mathematical failure (positive
    # dimension), reported downstream; more cannot form a Bezoutian
    if not polys or len(polys) > len(variables):
        _fail(
            f"need at most {len(variables)} polynomials and at least one, got {len(polys)}",
            polys,
            source,
        )
    f = [_expr(p, lambda s: parse_polynomial(s, variables, k), source) for p in polys]
    points = []
    for i, rec in enumerate(doc.get("points") or []):
        if not isinstance(rec, dict) or "coords" not in rec:
            _fail("each point needs 'coords'", rec, source)
        if "extension" in rec:
            if k.is_extension:
                _fail("points over an extended ground field must be rational", rec, source)
            K = parse_extension(k, rec["extension"], source)
        else:
            K = k
        coords = rec["coords"]
        if not isinstance(coords, list):
            _fail("'coords' must be a list", coords, source)
        if len(coords) != len(variables):
            _fail(f"point needs {len(variables)} coordinates", coords, source)
        values = [_expr(c, lambda s: parse_constant(s, K), source) for c in coords]
        points.append(PointSpec(K, values, str(rec.get("name", f"p{i + 1}"))))
    seed = doc.get("seed", "0")
    try:
        seed = int(seed)
    except ValueError:
        _fail("seed must be an integer", seed, source)
    complete = str(doc.get("complete", "false")).lower() == "true"
    return Problem(k, variables, f, points, seed, complete, source, [str(p) for p in polys])


def read_problem(path):
    with open(path, encoding="utf-8") as fh:
        return load_problem(fh.read(), str(path))
