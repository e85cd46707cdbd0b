"""Exact arithmetic in QQ, GF(p) for odd p, and simple extensions of either.

A :class:`FieldDescriptor` is a base field optionally adjoined one root of a
monic irreducible polynomial.  Elements carry their coordinates in the
power basis ``1, a, ..., a^(d-1)`` of the generator, with base scalars in
canonical form (``Fraction`` in lowest terms, or least residues mod p), so
equality of elements is equality of coordinate tuples.

Only single-step extensions exist.  Every base field is perfect, so every
extension built here is separable.
"""

import enum
import itertools
from fractions import Fraction
from functools import cached_property

from sympy import divisors

from . import univariate as up
from .errors import DescriptorMismatch, DivisionByZero, InvalidField


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class BaseField:
    """QQ when ``char == 0``, otherwise the prime field GF(char)."""

    __slots__ = ("char",)

    def __init__(self, char=0):
        if char == 2:
            raise InvalidField("characteristic 2 is not supported")
        if char != 0 and not _is_odd_prime(char):
            raise InvalidField(f"{char} is not an odd prime")
        self.char = char

    def __eq__(self, other):
        return isinstance(other, BaseField) and other.char == self.char

    def __hash__(self):
        return hash(("BaseField", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def is_rational(self):
        return self.char == 0

    def scalar(self, x):
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise DivisionByZero(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.char) % self.char
        return int(x) % self.char

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else a * b % self.char

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / a if self.char == 0 else pow(a, -1, self.char)

    def format(self, a):
        return str(a)


QQ_BASE = BaseField(0)


class Irreducibility(enum.Enum):
    YES = "yes"
    NO = "no"
    CANNOT_CERTIFY = "cannot_certify"


class FieldDescriptor:
    """A base field, optionally extended by one generator.

    ``min_poly`` lists base scalars lowest degree first and must be monic.
    Pass ``assume_irreducible=True`` to accept a polynomial whose
    irreducibility cannot be certified (degree >= 4 over QQ).
    """

    def __init__(self, base, generator=None, min_poly=None, *, assume_irreducible=False):
        if not isinstance(base, BaseField):
            raise TypeError("base must be a BaseField")
        self.base = base
        if generator is None:
            if min_poly is not None:
                raise InvalidField("min_poly given without a generator name")
            self.generator = None
            self.min_poly = (base.scalar(0), base.scalar(1))
            return
        coeffs = tuple(base.scalar(c) for c in min_poly)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise InvalidField("minimal polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise InvalidField("minimal polynomial must be monic")
        self.generator = str(generator)
        self.min_poly = coeffs
        trivial = FieldDescriptor(base)
        poly = [trivial.from_coords([c]) for c in coeffs]
        verdict = is_irreducible(poly)
        if verdict is Irreducibility.NO:
            raise InvalidField(f"{self._poly_str()} is reducible over {base}")
        if verdict is Irreducibility.CANNOT_CERTIFY and not assume_irreducible:
            raise InvalidField(
                f"could not certify irreducibility of {self._poly_str()} over {base}"
            )
        if len(up.gcd(poly, up.derivative(poly))) != 1:
            raise InvalidField(f"{self._poly_str()} is not separable")

    @classmethod
    def rationals(cls):
        return cls(QQ_BASE)

    @classmethod
    def prime(cls, p):
        return cls(BaseField(p))

    def extend(self, generator, min_poly, **kw):
        """Extension of this (non-extended) field; ``min_poly`` coefficients low first."""
        if self.is_extension:
            raise InvalidField("towers of extensions are not supported")
        coeffs = [c.coords[0] if isinstance(c, FieldElement) else c for c in min_poly]
        return FieldDescriptor(self.base, generator, coeffs, **kw)

    # identity -----------------------------------------------------------

    def _key(self):
        return (self.base, self.generator, self.min_poly)

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _poly_str(self):
        name = self.generator or "t"
        trivial = FieldDescriptor(self.base)
        return format_univariate([trivial.from_coords([c]) for c in self.min_poly], name)

    def __repr__(self):
        if not self.is_extension:
            return repr(self.base)
        return f"{self.base!r}[{self.generator}]/({self._poly_str()})"

    # structure ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.min_poly) - 1

    @property
    def is_extension(self):
        return self.generator is not None

    @property
    def char(self):
        return self.base.char

    @property
    def is_finite(self):
        return self.base.char != 0

    @property
    def order(self):
        if not self.is_finite:
            raise InvalidField("QQ-based fields are infinite")
        return self.base.char ** self.degree

    @cached_property
    def base_field(self):
        """The base field as a (non-extended) descriptor."""
        return self if not self.is_extension else FieldDescriptor(self.base)

    def extends(self, other):
        """True when elements of ``other`` embed canonically into this field."""
        return other == self or (not other.is_extension and other.base == self.base)

    # elements -----------------------------------------------------------

    def from_coords(self, coords):
        coords = tuple(self.base.scalar(c) for c in coords)
        if len(coords) != self.degree:
            raise DescriptorMismatch(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if self.extends(value.field):
                return self.embed(value)
            raise DescriptorMismatch(f"cannot coerce an element of {value.field} into {self}")
        zero = self.base.scalar(0)
        return FieldElement(self, (self.base.scalar(value),) + (zero,) * (self.degree - 1))

    def embed(self, x):
        if x.field == self:
            return x
        if not self.extends(x.field):
            raise DescriptorMismatch(f"{x.field} does not embed into {self}")
        return FieldElement(self, x.coords + (self.base.scalar(0),) * (self.degree - 1))

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    @cached_property
    def gen(self):
        if not self.is_extension:
            raise InvalidField("field has no generator")
        if self.degree == 1:
            return self(-self.min_poly[0])
        coords = [0] * self.degree
        coords[1] = 1
        return self.from_coords(coords)

    def power_basis(self):
        if not self.is_extension:
            return [self.one]
        g = self.gen
        out = [self.one]
        for _ in range(1, self.degree):
            out.append(out[-1] * g)
        return out

    def elements(self):
        """All elements of a finite field, in lexicographic coordinate order."""
        p = self.base.char
        if p == 0:
            raise InvalidField("cannot enumerate an infinite field")
        for coords in itertools.product(range(p), repeat=self.degree):
            yield FieldElement(self, tuple(reversed(coords)))

    @cached_property
    def _power_traces(self):
        # Tr(a^k) for k < d, read off the multiplication matrices
        b = self.base
        out = []
        for k, basis_elt in enumerate(self.power_basis()):
            acc = b.scalar(0)
            for j, e in enumerate(self.power_basis()):
                acc = b.add(acc, (basis_elt * e).coords[j])
            out.append(acc)
        return tuple(out)


class FieldElement:
    """Immutable element of a :class:`FieldDescriptor`."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords
        self._hash = None

    # coercion -----------------------------------------------------------

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field == self.field and other.coords == self.coords
        if isinstance(other, (int, Fraction)):
            try:
                return self.coords == self.field(other).coords
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coords))
        return self._hash

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        b = self.field.base
        return FieldElement(self.field, tuple(b.add(x, y) for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        b = self.field.base
        return FieldElement(self.field, tuple(b.neg(x) for x in self.coords))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        b = self.field.base
        return FieldElement(self.field, tuple(b.sub(x, y) for x, y in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.field
        b = F.base
        if F.degree == 1:
            return FieldElement(F, (b.mul(self.coords[0], other.coords[0]),))
        d = F.degree
        prod = [b.scalar(0)] * (2 * d - 1)
        for i, x in enumerate(self.coords):
            if x == 0:
                continue
            for j, y in enumerate(other.coords):
                if y != 0:
                    prod[i + j] = b.add(prod[i + j], b.mul(x, y))
        m = F.min_poly
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == 0:
                continue
            prod[k] = b.scalar(0)
            for j in range(d):
                prod[k - d + j] = b.sub(prod[k - d + j], b.mul(c, m[j]))
        return FieldElement(F, tuple(prod[:d]))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("division by zero")
        F = self.field
        b = F.base
        if F.degree == 1:
            return FieldElement(F, (b.inv(self.coords[0]),))
        K = F.base_field
        a = up.trim([K.from_coords([c]) for c in self.coords])
        m = [K.from_coords([c]) for c in F.min_poly]
        s = up.inverse_mod(a, m)
        coords = [c.coords[0] for c in s] + [b.scalar(0)] * (F.degree - len(s))
        return FieldElement(F, tuple(coords))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # field-theoretic ----------------------------------------------------

    def trace(self):
        """Trace to the base field, as an element of ``field.base_field``."""
        F = self.field
        b = F.base
        acc = b.scalar(0)
        for c, t in zip(self.coords, F._power_traces):
            acc = b.add(acc, b.mul(c, t))
        return F.base_field.from_coords([acc])

    def norm(self):
        from .linalg import det

        return det(self.multiplication_matrix())

    def multiplication_matrix(self):
        """d x d matrix over the base field; column j holds ``self * a^j``."""
        K = self.field.base_field
        cols = [(self * e).coords for e in self.field.power_basis()]
        return [[K.from_coords([cols[j][i]]) for j in range(len(cols))] for i in range(len(cols))]

    def base_coords(self):
        """Coordinates as elements of the base field."""
        K = self.field.base_field
        return [K.from_coords([c]) for c in self.coords]

    def in_base(self):
        return all(c == 0 for c in self.coords[1:])

    def to_base(self):
        if not self.in_base():
            raise DescriptorMismatch(f"{self} does not lie in the base field")
        return self.field.base_field.from_coords([self.coords[0]])

    def min_poly(self):
        """Minimal polynomial over the base field (monic, lowest degree first)."""
        K = self.field.base_field
        rows = []
        power = self.field.one
        # rows of [coords | unit vector]: a dependency among powers shows up as a zero row
        for k in range(self.field.degree + 1):
            vec = list(power.base_coords())
            rows.append(vec)
            deps = _first_dependency(rows)
            if deps is not None:
                return up.monic(up.trim(deps))
            power = power * self
        raise AssertionError("no dependency among d+1 powers")

    # display ------------------------------------------------------------

    def __repr__(self):
        return f"FieldElement({self}, {self.field!r})"

    def __str__(self):
        F = self.field
        if not F.is_extension or F.degree == 1:
            return F.base.format(self.coords[0])
        return format_univariate(self.base_coords(), F.generator)

    def is_rational_integer(self):
        return self.in_base() and (
            self.field.char != 0 or Fraction(self.coords[0]).denominator == 1
        )


def _first_dependency(vectors):
    """Coefficients ``c`` with ``sum c_i v_i = 0`` and ``c_last = 1``, or None."""
    from .linalg import nullspace, transpose

    ns = nullspace(transpose(vectors))
    for v in ns:
        if v[-1] != 0:
            return [x / v[-1] for x in v]
    return None


def format_univariate(coeffs, name):
    """Render a coefficient list (low first) as text the expression parser reads back."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        s = str(c)
        negative = s.startswith("-")
        if negative:
            s = s[1:]
        if k == 0:
            body = s
        else:
            mono = name if k == 1 else f"{name}^{k}"
            body = mono if s == "1" else f"{s}*{mono}"
        terms.append(("-" if negative else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def min_poly_of(x):
    return x.min_poly()


def trace_to_base(x):
    return x.trace()


def generated_subfield_degree(elements, field):
    """Degree over the base of the subfield generated by ``elements``."""
    from .linalg import rref

    K = field.base_field
    span = [field.one]
    queue = [field.one]

    def independent(vecs):
        return len(rref([v.base_coords() for v in vecs])[1]) == len(vecs)

    while queue:
        b = queue.pop()
        for g in elements:
            cand = b * g
            if independent(span + [cand]):
                span.append(cand)
                queue.append(cand)
    return len(span)


def is_irreducible(poly):
    """Irreducibility of a monic polynomial over a base field.

    ``poly`` is a coefficient list (low first) of elements of a non-extended
    descriptor.  Returns an :class:`Irreducibility`.
    """
    poly = up.trim(poly)
    if len(poly) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    K = poly[-1].field
    if K.is_extension:
        raise InvalidField("irreducibility is only tested over a base field")
    n = len(poly) - 1
    if n == 1:
        return Irreducibility.YES
    if K.is_finite:
        if n > 8:
            return Irreducibility.CANNOT_CERTIFY
        return Irreducibility.YES if _fp_irreducible(poly) else Irreducibility.NO
    ints = _integer_multiple(poly)
    if _has_rational_root(ints):
        return Irreducibility.NO
    if n <= 3:
        return Irreducibility.YES
    if n > 8:
        return Irreducibility.CANNOT_CERTIFY
    lead, const = ints[-1], ints[0]
    for p in _PRIME_BUDGET:
        if lead % p == 0 or const % p == 0:
            continue
        Fp = FieldDescriptor.prime(p)
        reduced = up.monic([Fp(c) for c in ints])
        if _fp_irreducible(reduced):
            return Irreducibility.YES
    return Irreducibility.CANNOT_CERTIFY


_PRIME_BUDGET = [p for p in range(3, 200) if _is_odd_prime(p)]


def _powmod(base, e, mod):
    result = [mod[-1].field.one]
    while e:
        if e & 1:
            result = up.rem(up.mul(result, base), mod)
        e >>= 1
        if e:
            base = up.rem(up.mul(base, base), mod)
    return result


def _fp_irreducible(poly):
    """Ben-Or test: no factor of degree k <= n/2 divides ``x^(p^k) - x``."""
    K = poly[-1].field
    p = K.char
    n = len(poly) - 1
    x = [K.zero, K.one]
    h = x
    for _ in range(n // 2):
        h = _powmod(h, p, poly)
        if len(up.gcd(up.sub(h, x), poly)) > 1:
            return False
    return True


def _integer_multiple(poly):
    from math import lcm

    fr = [Fraction(c.coords[0]) for c in poly]
    den = lcm(*(f.denominator for f in fr))
    return [int(f * den) for f in fr]


def _has_rational_root(ints):
    if ints[0] == 0:
        return True
    lead, const = abs(ints[-1]), abs(ints[0])
    for r in divisors(const):
        for s in divisors(lead):
            for cand in (Fraction(r, s), Fraction(-r, s)):
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    return True
    return False
