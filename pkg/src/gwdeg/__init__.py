"""Local A1-Brouwer degrees of zero-dimensional polynomial systems.

Exact arithmetic over QQ, GF(p) and their simple extensions; classes are
computed in the Grothendieck-Witt ring either directly from a localised
Scheja-Storch form or by base change followed by a trace transfer.
"""

from .degree import (
    PointSpec,
    global_degree,
    jacobian_class,
    jacobian_transfer,
    local_degree_direct,
    local_degree_trace,
    verify_trace_theorem,
)
from .errors import GWDegError, MathError, ParseError
from .fields import FieldDescriptor, FieldElement
from .gw import GWClass, Verdict, diagonalize, gw_equal, invariants
from .parser import parse_constant, parse_polynomial
from .poly import MultiPoly
from .problem import load_problem, read_problem

__version__ = "0.1.0"

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "GWClass",
    "GWDegError",
    "MathError",
    "MultiPoly",
    "ParseError",
    "PointSpec",
    "Verdict",
    "diagonalize",
    "global_degree",
    "gw_equal",
    "invariants",
    "jacobian_class",
    "jacobian_transfer",
    "load_problem",
    "local_degree_direct",
    "local_degree_trace",
    "parse_constant",
    "parse_polynomial",
    "read_problem",
    "verify_trace_theorem",
]
