"""Recursive-descent parser for polynomial expressions.

Grammar (LL(1), no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | SYMBOL | "(" expr ")"

``/`` is accepted only when the divisor is a nonzero constant.  Symbols are
the declared variables plus the field generator, if any.
"""

import re

from .errors import ParseError, UnknownSymbol
from .poly import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("sym", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables, field, symbols):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = tuple(variables)
        self.field = field
        self.symbols = symbols

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.advance()
        if tok[1] != value or tok[0] != "op":
            raise ParseError(f"expected {value!r}, found {_describe(tok)}", tok[2])
        return tok

    def parse(self):
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {_describe(tok)}", tok[2])
        return result

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.advance()
            rhs = self.unary()
            if tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by a nonzero constant", tok[2])
                acc = acc.scale(rhs.constant_coeff().inv())
        return acc

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            tok = self.advance()
            if tok[0] != "int":
                raise ParseError(
                    f"exponent must be a nonnegative integer literal, found {_describe(tok)}",
                    tok[2],
                )
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.advance()
        kind, value, pos = tok
        if kind == "int":
            return MultiPoly.constant(self.field, self.variables, int(value))
        if kind == "sym":
            if value in self.variables:
                return MultiPoly.variable(self.field, self.variables, value)
            if value in self.symbols:
                return MultiPoly.constant(self.field, self.variables, self.symbols[value])
            raise UnknownSymbol(f"unknown symbol {value!r}", pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {_describe(tok)}", pos)


def _describe(tok):
    kind, value, _ = tok
    if kind == "end":
        return "end of input"
    return repr(value)


def parse_polynomial(text, variables, field, symbols=None):
    """Parse ``text`` into a :class:`MultiPoly` over ``field`` in ``variables``.

    The field generator (if any) is bound automatically; ``symbols`` may add
    further constant bindings.
    """
    bound = {}
    if field.is_extension:
        bound[field.generator] = field.gen
    if symbols:
        bound.update(symbols)
    clash = set(bound) & set(variables)
    if clash:
        raise ParseError(f"symbol(s) {sorted(clash)} used both as variable and constant")
    return _Parser(text, variables, field, bound).parse()


def parse_constant(text, field, symbols=None):
    """Parse an expression in the generator alone, returning a field element."""
    p = parse_polynomial(text, (), field, symbols)
    return p.constant_coeff()
