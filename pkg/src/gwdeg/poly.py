"""Sparse multivariate polynomials over a :class:`~gwdeg.fields.FieldDescriptor`.

Terms are kept in a dict from exponent tuples to nonzero field elements.
Values are treated as immutable: every operation returns a new polynomial.
"""

from fractions import Fraction

from .errors import DescriptorMismatch, IncompatibleFields, InexactDivision
from .fields import FieldElement


class MonomialOrder:
    """Graded reverse lexicographic or lexicographic order.

    ``perm`` lists variable indices from most to least significant; the
    default is the declared variable order.
    """

    def __init__(self, kind="grevlex", perm=None):
        if kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None

    def key(self, exps):
        if self.perm is not None:
            exps = tuple(exps[i] for i in self.perm)
        if self.kind == "lex":
            return exps
        return (sum(exps),) + tuple(-e for e in reversed(exps))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.perm) == (other.kind, other.perm)

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, perm={self.perm})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    __slots__ = ("field", "variables", "terms")

    def __init__(self, field, variables, terms=None):
        self.field = field
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match {n} variables")
            c = field(c)
            if not c.is_zero():
                clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, variables, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj.variables = variables
        obj.terms = terms
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, field, variables, c):
        n = len(variables)
        return cls(field, variables, {(0,) * n: c})

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        exps = [0] * len(variables)
        exps[i] = 1
        return cls(field, variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, field, variables, exps, c=1):
        return cls(field, variables, {tuple(exps): c})

    def gens(self):
        return [MultiPoly.variable(self.field, self.variables, v) for v in self.variables]

    # basics -------------------------------------------------------------

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (
                self.field == other.field
                and self.variables == other.variables
                and self.terms == other.terms
            )
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.variables, frozenset(self.terms.items())))

    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.field != self.field or other.variables != self.variables:
                raise DescriptorMismatch(
                    f"polynomials over {self.field}{list(self.variables)} and "
                    f"{other.field}{list(other.variables)}"
                )
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self._lift(other)
        return NotImplemented

    def _lift(self, c):
        return MultiPoly(self.field, self.variables, {(0,) * self.nvars: self.field(c)})

    # ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return MultiPoly._raw(self.field, self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.field, self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly._raw(
            self.field, self.variables, {e: c for e, c in out.items() if not c.is_zero()}
        )

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field(c)
        if c.is_zero():
            return MultiPoly._raw(self.field, self.variables, {})
        return MultiPoly._raw(self.field, self.variables, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exps, c):
        return MultiPoly._raw(
            self.field,
            self.variables,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self._lift(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ordered views ------------------------------------------------------

    def sorted_terms(self, order=GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order=GREVLEX):
        return max(self.terms, key=order.key)

    def leading_term(self, order=GREVLEX):
        e = self.leading_monomial(order)
        return e, self.terms[e]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(c.inv())

    # maps ---------------------------------------------------------------

    def evaluate(self, point):
        """Evaluate at ``point``; coordinates may lie in an extension of ``self.field``."""
        point = list(point)
        if len(point) != self.nvars:
            raise DescriptorMismatch(f"expected {self.nvars} coordinates, got {len(point)}")
        target = point[0].field if point and isinstance(point[0], FieldElement) else self.field
        if not target.extends(self.field):
            raise DescriptorMismatch(f"coordinates in {target} do not extend {self.field}")
        point = [target(x) for x in point]
        powers = [dict() for _ in point]
        acc = target.zero
        for exps, c in self.terms.items():
            val = target.embed(c)
            for i, e in enumerate(exps):
                if e:
                    pw = powers[i].get(e)
                    if pw is None:
                        pw = powers[i][e] = point[i] ** e
                    val = val * pw
            acc = acc + val
        return acc

    def base_change(self, target):
        """Same polynomial with coefficients embedded into ``target``."""
        if not target.extends(self.field):
            raise IncompatibleFields(f"{self.field} does not embed into {target}")
        return MultiPoly._raw(
            target, self.variables, {e: target.embed(c) for e, c in self.terms.items()}
        )

    def remap(self, variables, positions):
        """Move variable ``i`` to slot ``positions[i]`` of a ring on ``variables``."""
        n = len(variables)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(exps):
                new[positions[i]] += e
            new = tuple(new)
            out[new] = out[new] + c if new in out else c
        return MultiPoly._raw(self.field, tuple(variables), {e: c for e, c in out.items() if c})

    def substitute(self, images):
        """Ring homomorphism sending variable ``i`` to the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise DescriptorMismatch("one image per variable required")
        ring = images[0]
        acc = MultiPoly._raw(ring.field, ring.variables, {})
        cache = {}
        for exps, c in self.terms.items():
            term = ring._lift(ring.field.embed(c))
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            acc = acc + term
        return acc

    def derivative(self, i):
        out = {}
        for exps, c in self.terms.items():
            if exps[i]:
                new = list(exps)
                new[i] -= 1
                out[tuple(new)] = c * exps[i]
        return MultiPoly(self.field, self.variables, out)

    # text ---------------------------------------------------------------

    def to_string(self, order=GREVLEX):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms(order):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            coeff = str(c)
            negative = False
            if " " in coeff:
                coeff = f"({coeff})"
            elif coeff.startswith("-"):
                negative = True
                coeff = coeff[1:]
            if not mono:
                body = coeff
            elif coeff == "1":
                body = mono
            else:
                body = f"{coeff}*{mono}"
            parts.append(("-" if negative else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r}, {list(self.variables)}, {self.field!r})"


def divide(num, divisors, order=GREVLEX):
    """Multivariate division. Returns ``(quotients, remainder)``."""
    quotients = [MultiPoly._raw(num.field, num.variables, {}) for _ in divisors]
    leads = [d.leading_term(order) for d in divisors]
    p = dict(num.terms)
    rem = {}
    while p:
        e = max(p, key=order.key)
        c = p[e]
        for k, (le, lc) in enumerate(leads):
            if monomial_divides(le, e):
                shift = tuple(a - b for a, b in zip(e, le))
                q = c / lc
                quotients[k].terms[shift] = quotients[k].terms.get(shift, num.field.zero) + q
                for de, dc in divisors[k].terms.items():
                    m = tuple(a + b for a, b in zip(de, shift))
                    v = p.get(m, num.field.zero) - q * dc
                    if v.is_zero():
                        p.pop(m, None)
                    else:
                        p[m] = v
                break
        else:
            rem[e] = c
            del p[e]
    for q in quotients:
        q.terms = {e: c for e, c in q.terms.items() if not c.is_zero()}
    return quotients, MultiPoly._raw(num.field, num.variables, rem)


def exact_divide(num, den, order=GREVLEX):
    """Quotient of an exact division; raises :class:`InexactDivision` otherwise."""
    num._check(den)
    if den.is_zero():
        raise InexactDivision("division by the zero polynomial")
    (q,), r = divide(num, [den], order)
    if not r.is_zero():
        raise InexactDivision(f"{den} does not divide {num}")
    return q


def parse(text, variables, field, symbols=None):
    from .parser import parse_polynomial

    return parse_polynomial(text, variables, field, symbols)
