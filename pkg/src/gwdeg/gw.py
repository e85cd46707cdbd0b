"""Grothendieck-Witt classes of nondegenerate symmetric bilinear forms.

Equality is decided from invariants:

* over a finite field of odd characteristic, rank and discriminant form a
  complete set of invariants;
* over QQ, rank, signature, discriminant and the Hasse-Witt invariants at
  all places are complete (Hasse-Minkowski; see e.g. Lam, *Introduction to
  Quadratic Forms over Fields*, VI.3.5), and two classes of equal rank are
  equal in GW exactly when the forms are isometric (Witt cancellation);
* over simple extensions of QQ only disagreement can be certified, so the
  verdict is ``UNDECIDED`` unless the diagonals already agree.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy import factorint, primefactors

from . import linalg
from .errors import DegenerateForm, DescriptorMismatch
from .fields import FieldElement

INF = "inf"


class Verdict(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNDECIDED = "Undecided"


class Square(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


class GramMatrix:
    """Symmetric matrix over a field, with optional labels for the basis."""

    def __init__(self, field, entries, labels=None):
        entries = [[field(x) for x in row] for row in entries]
        if not linalg.is_symmetric(entries):
            raise ValueError("Gram matrix must be square and symmetric")
        self.field = field
        self.entries = entries
        self.labels = list(labels) if labels is not None else None

    @property
    def size(self):
        return len(self.entries)

    def det(self):
        return linalg.det(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, GramMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def as_strings(self):
        return [[str(x) for x in row] for row in self.entries]

    def __repr__(self):
        return f"GramMatrix({self.as_strings()}, {self.field!r})"


# square classes -----------------------------------------------------------


def _squarefree_int(q):
    """Squarefree integer in the square class of a nonzero rational."""
    q = Fraction(q)
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def _is_rational_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _rational_sqrt(q):
    q = Fraction(q)
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def is_square(u):
    """Decide whether a nonzero field element is a square."""
    if u.is_zero():
        raise DegenerateForm("zero has no square class")
    F = u.field
    if F.is_finite:
        return Square.YES if u ** ((F.order - 1) // 2) == 1 else Square.NO
    if F.degree == 1:
        return Square.YES if _is_rational_square(u.coords[0]) else Square.NO
    if F.degree == 2:
        return _quadratic_is_square(u)
    if u.in_base() and F.degree % 2 == 1:
        # a rational non-square stays a non-square in an odd-degree extension
        return Square.YES if _is_rational_square(u.coords[0]) else Square.NO
    return Square.UNDECIDED


def _quadratic_is_square(u):
    F = u.field
    c0, c1 = (Fraction(c) for c in F.min_poly[:2])
    disc = c1 * c1 - 4 * c0
    x0, x1 = (Fraction(c) for c in u.coords)
    # u = a + b*s with s^2 = disc
    a = x0 - x1 * c1 / 2
    b = x1 / 2
    if b == 0:
        return Square.YES if _is_rational_square(a) or _is_rational_square(a / disc) else Square.NO
    norm = a * a - disc * b * b
    if not _is_rational_square(norm):
        return Square.NO
    n = _rational_sqrt(norm)
    for t in ((a + n) / 2, (a - n) / 2):
        if t != 0 and _is_rational_square(t):
            return Square.YES
    return Square.NO


def _finite_nonresidue(F):
    cached = _NONRESIDUES.get(F)
    if cached is None:
        cached = next(x for x in F.elements() if not x.is_zero() and is_square(x) is Square.NO)
        _NONRESIDUES[F] = cached
    return cached


_NONRESIDUES = {}


def square_class_rep(u):
    """Canonical representative of the square class of ``u`` where one exists."""
    F = u.field
    if F.is_finite:
        return F.one if is_square(u) is Square.YES else _finite_nonresidue(F)
    if F.degree == 1:
        return F(_squarefree_int(u.coords[0]))
    return u


def same_square_class(u, v):
    return is_square(u / v)


# classes -----------------------------------------------------------------


class GWClass:
    """Diagonal representative ``<u_1, ..., u_r>`` of a class in GW(field)."""

    __slots__ = ("field", "diagonal")

    def __init__(self, field, diagonal):
        entries = []
        for u in diagonal:
            u = field(u)
            if u.is_zero():
                raise DegenerateForm("diagonal entries of a GW class must be nonzero")
            entries.append(square_class_rep(u))
        self.field = field
        self.diagonal = tuple(entries)

    @property
    def rank(self):
        return len(self.diagonal)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return tensor(self, other)

    def __eq__(self, other):
        return isinstance(other, GWClass) and gw_equal(self, other) is Verdict.EQUAL

    __hash__ = None

    def scaled(self, u):
        return GWClass(self.field, [x * u for x in self.diagonal])

    def gram(self):
        n = self.rank
        z = self.field.zero
        return GramMatrix(
            self.field, [[self.diagonal[i] if i == j else z for j in range(n)] for i in range(n)]
        )

    def entries_as_strings(self):
        return [str(u) for u in self.diagonal]

    def __str__(self):
        return "<" + ", ".join(self.entries_as_strings()) + ">"

    def __repr__(self):
        return f"GWClass({self}, {self.field!r})"


def hyperbolic(field):
    return GWClass(field, [1, -1])


def _check_same_field(c1, c2):
    if c1.field != c2.field:
        raise DescriptorMismatch(f"GW classes over {c1.field} and {c2.field}")


def add(c1, c2):
    _check_same_field(c1, c2)
    return GWClass(c1.field, c1.diagonal + c2.diagonal)


def tensor(c1, c2):
    _check_same_field(c1, c2)
    return GWClass(c1.field, [a * b for a in c1.diagonal for b in c2.diagonal])


def direct_sum(classes, field):
    out = GWClass(field, [])
    for c in classes:
        out = add(out, c)
    return out


# diagonalisation ------------------------------------------------------------


@dataclass
class Diagonalization:
    gw_class: GWClass
    transform: list
    diagonal: list


def diagonalize(G):
    """Congruence diagonalisation ``P^T G P = D`` with the result re-verified."""
    if isinstance(G, GramMatrix):
        field, entries = G.field, G.entries
    else:
        entries = [list(r) for r in G]
        field = entries[0][0].field
    n = len(entries)
    A = [list(r) for r in entries]
    P = linalg.identity(field.zero, field.one, n)

    def col_add(dst, src, c):
        # A <- E^T A E with E adding c * (column src) to column dst
        for row in A:
            row[dst] = row[dst] + c * row[src]
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        for row in P:
            row[dst] = row[dst] + c * row[src]

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(k, n) if i != j and A[i][j] != 0),
                None,
            )
            if pair is None:
                raise DegenerateForm("form is degenerate")
            i, j = pair
            col_add(i, j, field.one)
            piv = i
        swap(k, piv)
        inv = 1 / A[k][k]
        for j in range(k + 1, n):
            if A[k][j] != 0:
                col_add(j, k, -A[k][j] * inv)

    D = linalg.congruent(P, entries)
    for i in range(n):
        for j in range(n):
            if i != j and D[i][j] != 0:
                raise AssertionError("diagonalisation certificate failed")
    diag = [D[i][i] for i in range(n)]
    if any(u.is_zero() for u in diag):
        raise DegenerateForm("form is degenerate")
    if diag != [A[i][i] for i in range(n)]:
        raise AssertionError("diagonalisation certificate failed")
    return Diagonalization(GWClass(field, diag), P, diag)


# Hilbert symbols over QQ -----------------------------------------------------


def _split_p(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u, p):
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def hilbert_symbol(a, b, place):
    """Local Hilbert symbol ``(a, b)_v`` of nonzero rationals; ``place`` is a prime or ``INF``."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == INF:
        return -1 if a < 0 and b < 0 else 1
    # scale by squares to integers
    a = a.numerator * a.denominator
    b = b.numerator * b.denominator
    p = int(place)
    alpha, u = _split_p(a, p)
    beta, v = _split_p(b, p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(v, p)
    return sign


def relevant_places(values):
    """``INF``, 2, and the primes dividing numerator or denominator of any value."""
    primes = {2}
    for x in values:
        x = Fraction(x)
        primes.update(primefactors(abs(x.numerator)))
        primes.update(primefactors(x.denominator))
    return [INF] + sorted(primes)


# invariants -------------------------------------------------------------------


@dataclass
class GWInvariants:
    rank: int
    det_square_class: FieldElement
    signature: int = None
    hasse_witt: dict = None
    decided: bool = True

    @property
    def signed_discriminant(self):
        r = self.rank
        sign = -1 if (r * (r - 1) // 2) % 2 else 1
        return square_class_rep(self.det_square_class * sign)

    def to_dict(self):
        out = {"rank": self.rank, "det_square_class": str(self.det_square_class)}
        if self.signature is not None:
            out["signature"] = self.signature
        if self.hasse_witt is not None:
            out["hasse_witt"] = {str(k): v for k, v in self.hasse_witt.items()}
        return out


def _rational(u):
    return Fraction(u.coords[0])


def determinant_class(c):
    det = c.field.one
    for u in c.diagonal:
        det = det * u
    return square_class_rep(det)


def hasse_witt(c, places):
    vals = [_rational(u) for u in c.diagonal]
    out = {}
    for v in places:
        s = 1
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                s *= hilbert_symbol(vals[i], vals[j], v)
        out[v] = s
    return out


def invariants(c, extra_places=()):
    rank = c.rank
    det = determinant_class(c)
    F = c.field
    if F.is_finite:
        return GWInvariants(rank, det)
    if F.degree == 1:
        vals = [_rational(u) for u in c.diagonal]
        sig = sum(1 if x > 0 else -1 for x in vals)
        primes = {p for p in relevant_places(vals) if p != INF} | {p for p in extra_places if p != INF}
        places = [INF] + sorted(primes)
        return GWInvariants(rank, det, sig, hasse_witt(c, places))
    return GWInvariants(rank, det, decided=False)


def gw_equal(c1, c2):
    """Decide equality of two classes in GW(field)."""
    _check_same_field(c1, c2)
    if c1.rank != c2.rank:
        return Verdict.NOT_EQUAL
    F = c1.field
    if c1.rank == 0:
        return Verdict.EQUAL
    det1, det2 = determinant_class(c1), determinant_class(c2)
    if F.is_finite:
        return Verdict.EQUAL if det1 == det2 else Verdict.NOT_EQUAL
    if F.degree == 1:
        places = sorted(
            set(p for p in relevant_places(_rational(u) for u in c1.diagonal + c2.diagonal) if p != INF)
        )
        i1 = invariants(c1, places)
        i2 = invariants(c2, places)
        same = (
            i1.signature == i2.signature
            and det1 == det2
            and i1.hasse_witt == i2.hasse_witt
        )
        return Verdict.EQUAL if same else Verdict.NOT_EQUAL
    if sorted(map(str, c1.diagonal)) == sorted(map(str, c2.diagonal)):
        return Verdict.EQUAL
    if same_square_class(det1, det2) is Square.NO:
        return Verdict.NOT_EQUAL
    return Verdict.UNDECIDED
