"""Zero-dimensional quotient algebras ``k[x]/(f)`` and their local factors.

The algebra is presented by a reduced Gröbner basis; elements are coordinate
vectors over the standard monomials.  The factor of the algebra supported
at one closed point is cut out by an idempotent built from a separating
linear form, using only the minimal polynomial of the form's value at the
point (no polynomial factorisation).
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from . import univariate as up
from .errors import (
    DescriptorMismatch,
    IdealIsUnit,
    NotAZero,
    NotZeroDimensional,
    SeparatingFormNotFound,
)
from .fields import _first_dependency
from .poly import GREVLEX, MultiPoly, divide, monomial_divides, monomial_lcm


# Gröbner bases ----------------------------------------------------------


def s_polynomial(f, g, order):
    (ef, cf), (eg, cg) = f.leading_term(order), g.leading_term(order)
    lcm = monomial_lcm(ef, eg)
    tf = tuple(a - b for a, b in zip(lcm, ef))
    tg = tuple(a - b for a, b in zip(lcm, eg))
    return f.mul_term(tf, cf.inv()) - g.mul_term(tg, cg.inv())


def reduce_poly(p, basis, order):
    return divide(p, basis, order)[1] if basis else p


def groebner(gens, order=GREVLEX):
    """Reduced Gröbner basis by Buchberger's algorithm.

    Pairs are taken in normal-selection order (smallest lcm first) and pairs
    with coprime leading monomials are skipped.  Raises
    :class:`IdealIsUnit` when the ideal contains a nonzero constant.
    """
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        if g.is_constant():
            raise IdealIsUnit("ideal contains a nonzero constant")
        basis.append(g.monic(order))
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                order.key(
                    monomial_lcm(
                        basis[ij[0]].leading_monomial(order), basis[ij[1]].leading_monomial(order)
                    )
                ),
                ij,
            ),
        )
        pairs.discard((i, j))
        li, lj = basis[i].leading_monomial(order), basis[j].leading_monomial(order)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        r = reduce_poly(s_polynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero():
            continue
        if r.is_constant():
            raise IdealIsUnit("ideal contains a nonzero constant")
        basis.append(r.monic(order))
        k = len(basis) - 1
        pairs |= {(k, t) for t in range(k)}
    return _interreduce(basis, order)


def _interreduce(basis, order):
    minimal = []
    leads = [g.leading_monomial(order) for g in basis]
    for i, g in enumerate(basis):
        li = leads[i]
        dominated = any(
            monomial_divides(leads[j], li) and (leads[j] != li or j < i)
            for j in range(len(basis))
            if j != i
        )
        if not dominated:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        lt_exp, lt_c = g.leading_term(order)
        tail = g - MultiPoly._raw(g.field, g.variables, {lt_exp: lt_c})
        tail = reduce_poly(tail, others, order)
        reduced.append((MultiPoly._raw(g.field, g.variables, {lt_exp: lt_c}) + tail).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return reduced


def is_groebner(basis, order=GREVLEX):
    for f, g in itertools.combinations(basis, 2):
        if not reduce_poly(s_polynomial(f, g, order), basis, order).is_zero():
            return False
    return True


def standard_basis(basis, order=GREVLEX):
    """Monomials outside the leading-term ideal, ascending in ``order``."""
    if not basis:
        raise NotZeroDimensional("the zero ideal is not zero-dimensional")
    n = basis[0].nvars
    leads = [g.leading_monomial(order) for g in basis]
    bounds = []
    for i in range(n):
        pure = [e[i] for e in leads if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            raise NotZeroDimensional(
                f"no leading monomial is a pure power of variable {basis[0].variables[i]}; "
                "the zero set is positive-dimensional"
            )
        bounds.append(min(pure))
    std = [
        e
        for e in itertools.product(*(range(b) for b in bounds))
        if not any(monomial_divides(l, e) for l in leads)
    ]
    std.sort(key=order.key)
    return std


class AlgebraPresentation:
    """``k[x_1..x_n]/(f_1..f_n)`` for a zero-dimensional ideal."""

    def __init__(self, generators, order=GREVLEX):
        generators = list(generators)
        if not generators:
            raise ValueError("need at least one generator")
        self.generators = generators
        self.field = generators[0].field
        self.variables = generators[0].variables
        self.order = order
        self.groebner_basis = groebner(generators, order)
        if not self.groebner_basis:
            raise NotZeroDimensional("the zero ideal is not zero-dimensional")
        self.std_basis = standard_basis(self.groebner_basis, order)
        self.index = {e: i for i, e in enumerate(self.std_basis)}
        self._nf_cache = {}
        self._var_matrices = None

    @property
    def dim(self):
        return len(self.std_basis)

    @property
    def nvars(self):
        return len(self.variables)

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def unit_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def one(self):
        return self.unit_vector(self.index[(0,) * self.nvars])

    def basis_polynomial(self, i):
        return MultiPoly.monomial(self.field, self.variables, self.std_basis[i])

    def to_poly(self, vec):
        return MultiPoly(
            self.field, self.variables, {e: c for e, c in zip(self.std_basis, vec) if c}
        )

    # normal forms -------------------------------------------------------

    def _reduce_to_vector(self, p):
        r = divide(p, self.groebner_basis, self.order)[1]
        v = self.zero_vector()
        for e, c in r.terms.items():
            v[self.index[e]] = c
        return v

    def variable_matrices(self):
        if self._var_matrices is None:
            mats = []
            for i in range(self.nvars):
                shift = tuple(1 if j == i else 0 for j in range(self.nvars))
                cols = [
                    self._reduce_to_vector(MultiPoly.monomial(self.field, self.variables, _add(e, shift)))
                    for e in self.std_basis
                ]
                mats.append(linalg.transpose(cols))
            self._var_matrices = mats
        return self._var_matrices

    def monomial_normal_form(self, exps):
        exps = tuple(exps)
        cached = self._nf_cache.get(exps)
        if cached is not None:
            return cached
        if exps in self.index:
            v = self.unit_vector(self.index[exps])
        else:
            i = next(j for j, e in enumerate(exps) if e)
            lower = list(exps)
            lower[i] -= 1
            v = linalg.matvec(self.variable_matrices()[i], self.monomial_normal_form(lower))
        self._nf_cache[exps] = v
        return v

    def normal_form(self, p):
        """Coordinates of ``p`` modulo the ideal, over the standard basis."""
        if p.field != self.field or p.variables != self.variables:
            raise DescriptorMismatch("polynomial does not live in this algebra's ring")
        v = self.zero_vector()
        for e, c in p.terms.items():
            nf = self.monomial_normal_form(e)
            v = [a + c * b for a, b in zip(v, nf)]
        return v

    def mult_matrix(self, g):
        """Matrix of multiplication by ``g``; column j is ``normal_form(g * e_j)``."""
        if isinstance(g, MultiPoly):
            cols = []
            for e in self.std_basis:
                col = self.zero_vector()
                for ge, c in g.terms.items():
                    nf = self.monomial_normal_form(_add(ge, e))
                    col = [a + c * b for a, b in zip(col, nf)]
                cols.append(col)
            return linalg.transpose(cols)
        return self.vector_mult_matrix(g)

    def vector_mult_matrix(self, vec):
        """Multiplication matrix of the element with coordinates ``vec``."""
        return self.mult_matrix(self.to_poly(vec))

    def multiply(self, u, v):
        return linalg.matvec(self.vector_mult_matrix(u), v)

    def element_min_poly(self, vec):
        """Minimal polynomial over k of an algebra element (coefficients low first)."""
        M = self.vector_mult_matrix(vec)
        powers = [self.one()]
        while True:
            deps = _first_dependency(powers)
            if deps is not None:
                return up.monic(up.trim(deps))
            powers.append(linalg.matvec(M, powers[-1]))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


# localisation -----------------------------------------------------------


@dataclass
class SeparatingForm:
    coefficients: list
    linear_form: MultiPoly
    value: object
    point_min_poly: list
    algebra_min_poly: list
    multiplicity_exponent: int
    cofactor: list
    attempts: int
    rejected: list = dc_field(default_factory=list)

    def describe(self):
        return str(self.linear_form)


@dataclass
class LocalFactor:
    parent: AlgebraPresentation
    idempotent: list
    local_basis: list
    separating_form: SeparatingForm

    @property
    def local_dim(self):
        return len(self.local_basis)


def _coords_of(point):
    return list(point.coords) if hasattr(point, "coords") else list(point)


def relative_min_poly(value, k):
    """Minimal polynomial over ``k`` of ``value``, which lies in ``k`` or a simple extension of it."""
    if value.field == k:
        return [-value, k.one]
    if not value.field.extends(k):
        raise DescriptorMismatch(f"{value.field} is not an extension of {k}")
    return [k(c) for c in value.min_poly()]


def express_in_power_basis(target, generator, k):
    """Coefficients ``r`` over ``k`` with ``sum r_j generator^j == target``."""
    K = generator.field
    if K == k:
        return [k(target)]
    d = K.degree
    powers = [K.one]
    for _ in range(1, d):
        powers.append(powers[-1] * generator)
    cols = [[k(c) for c in p.coords] for p in powers]
    rhs = [k(c) for c in target.coords]
    aug = [[cols[j][i] for j in range(d)] + [rhs[i]] for i in range(d)]
    r, pivots = linalg.rref(aug)
    if d in pivots:
        raise DescriptorMismatch("target is not in the subfield generated by the form value")
    out = [k.zero] * d
    for row, pc in zip(r, pivots):
        out[pc] = row[d]
    return out


def _candidate_forms(n, seed, max_attempts):
    for i in range(n):
        yield [1 if j == i else 0 for j in range(n)]
    rng = random.Random(seed)
    for _ in range(max_attempts - n):
        c = [rng.randint(-4, 4) for _ in range(n)]
        if any(c):
            yield c


def _eval_univariate_at(A, coeffs, M_l):
    """Coordinates of ``u(l)`` in ``A``, by Horner in the multiplication matrix."""
    v = A.zero_vector()
    one = A.one()
    for c in reversed(coeffs):
        v = linalg.matvec(M_l, v)
        v = [a + c * b for a, b in zip(v, one)]
    return v


def _split_off(m, m_p):
    """``(e, g)`` with ``m = m_p^e * g`` and ``m_p`` not dividing ``g``."""
    e = 0
    g = m
    while True:
        q, r = up.divmod_(g, m_p)
        if r:
            return e, g
        g = q
        e += 1


def _is_nilpotent(M):
    n = len(M)
    P = M
    k = 1
    while k < n:
        P = linalg.matmul(P, P)
        k *= 2
    return linalg.is_zero_matrix(P)


def separating_form(A, point, seed=0, max_attempts=32):
    """Find a linear form separating ``point`` from the other zeros of ``A``.

    Certificate: the form's value at the point generates the residue field;
    its minimal polynomial ``m_p`` splits off the algebra's minimal
    polynomial ``m = m_p^e g`` with ``gcd(m_p, g) = 1``; and every
    coordinate function minus its value (written as a polynomial in the
    form) is nilpotent on the resulting factor, so the factor carries a
    single closed point.
    """
    k = A.field
    coords = _coords_of(point)
    if len(coords) != A.nvars:
        raise DescriptorMismatch(f"point has {len(coords)} coordinates, ring has {A.nvars} variables")
    K = coords[0].field
    d = 1 if K == k else K.degree
    rejected = []
    for attempt, c in enumerate(_candidate_forms(A.nvars, seed, max_attempts), start=1):
        value = K.zero
        for ci, xi in zip(c, coords):
            value = value + xi * ci
        m_p = relative_min_poly(value, k)
        if len(m_p) - 1 != d:
            rejected.append((c, "value does not generate the residue field"))
            continue
        ell = MultiPoly(k, A.variables, {
            tuple(1 if j == i else 0 for j in range(A.nvars)): ci for i, ci in enumerate(c) if ci
        })
        ell_vec = A.normal_form(ell)
        M_l = A.vector_mult_matrix(ell_vec)
        m = A.element_min_poly(ell_vec)
        e, g = _split_off(m, m_p)
        if e == 0:
            raise NotAZero("the point is not a zero of the system")
        if len(up.gcd(m_p, g)) != 1:
            rejected.append((c, "point factor is not coprime to its cofactor"))
            continue
        sf = SeparatingForm(c, ell, value, m_p, m, e, g, attempt, rejected)
        idem = _idempotent(A, sf, M_l)
        M_e = A.vector_mult_matrix(idem)
        ok = True
        for i, xi in enumerate(coords):
            r = express_in_power_basis(xi, value, k)
            r_vec = _eval_univariate_at(A, r, M_l)
            xv = A.normal_form(MultiPoly.variable(k, A.variables, A.variables[i]))
            w = [a - b for a, b in zip(xv, r_vec)]
            if not _is_nilpotent(linalg.matmul(M_e, A.vector_mult_matrix(w))):
                ok = False
                break
        if not ok:
            rejected.append((c, "factor contains another closed point"))
            continue
        return sf
    raise SeparatingFormNotFound(
        f"no separating linear form after {max_attempts} attempts: "
        + "; ".join(f"{c}: {why}" for c, why in rejected)
    )


def _idempotent(A, sf, M_l=None):
    if M_l is None:
        M_l = A.vector_mult_matrix(A.normal_form(sf.linear_form))
    local_part = up.power(sf.point_min_poly, sf.multiplicity_exponent)
    h = up.inverse_mod(sf.cofactor, local_part) if len(local_part) > 1 else []
    u = up.mul(sf.cofactor, h)
    return _eval_univariate_at(A, u, M_l)


def localize(A, point, sf):
    """The factor ``e_p A`` of the algebra at ``point``, given a certified form."""
    idem = _idempotent(A, sf)
    M_e = A.vector_mult_matrix(idem)
    basis = linalg.column_space_basis(M_e)
    return LocalFactor(A, idem, basis, sf)
