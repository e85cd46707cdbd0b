"""Exception hierarchy.

Two families matter to callers: :class:`ParseError` (bad input text) and
:class:`MathError` (input is well formed but violates a mathematical
precondition).  The CLI maps them to distinct exit codes.
"""


class GWDegError(Exception):
    """Base class for all library errors."""


class ParseError(GWDegError):
    def __init__(self, message, position=None, line=None, source=None):
        self.detail = message
        self.position = position
        self.line = line
        self.source = source
        where = []
        if source:
            where.append(source)
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"column {position + 1}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class UnknownSymbol(ParseError):
    pass


class MathError(GWDegError):
    """A mathematical precondition was violated."""


class DescriptorMismatch(MathError):
    pass


class IncompatibleFields(MathError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class InvalidField(MathError):
    pass


class InexactDivision(MathError):
    pass


class IdealIsUnit(MathError):
    pass


class NotZeroDimensional(MathError):
    pass


class NotAZero(MathError):
    pass


class ResidueFieldMismatch(MathError):
    pass


class SeparatingFormNotFound(MathError):
    pass


class SingularBezoutian(MathError):
    pass


class DegenerateForm(MathError):
    pass


class DegenerateRestriction(MathError):
    pass


class ZeroJacobian(MathError):
    pass
