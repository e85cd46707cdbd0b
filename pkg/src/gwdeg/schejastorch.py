"""Bézoutians and Scheja-Storch forms of a zero-dimensional system.

The Bézoutian of ``f = (f_1..f_n)`` is the determinant of the matrix of
divided differences in doubled variables ``X, Y``.  Reduced modulo ``f(X)``
and ``f(Y)`` it reads ``sum B_ij e_i(X) e_j(Y)``; the distinguished
functional ``lam`` with ``sum_i lam(e_i) b_i = 1`` then gives the form
``(a, b) -> lam(a b)`` on the algebra, and its restriction to a local
factor is the local form.
"""

import itertools

from . import linalg
from .errors import DegenerateRestriction, DivisionByZero, SingularBezoutian
from .gw import GramMatrix
from .poly import MultiPoly, exact_divide


def doubled_variables(variables):
    return tuple(f"X_{v}" for v in variables) + tuple(f"Y_{v}" for v in variables)


def _permutation_sign(perm):
    sign = 1
    seen = set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def poly_det(matrix):
    """Determinant of a small square matrix of polynomials (Leibniz expansion)."""
    n = len(matrix)
    acc = matrix[0][0] * 0
    for perm in itertools.permutations(range(n)):
        term = matrix[0][perm[0]]
        for i in range(1, n):
            if term.is_zero():
                break
            term = term * matrix[i][perm[i]]
        if not term.is_zero():
            acc = acc + term if _permutation_sign(perm) > 0 else acc - term
    return acc


def jacobian_matrix(f):
    return [[fi.derivative(j) for j in range(fi.nvars)] for fi in f]


def jacobian_determinant(f):
    return poly_det(jacobian_matrix(f))


class Bezoutian:
    """The Bézoutian polynomial of ``f`` in variables ``X_*`` then ``Y_*``."""

    def __init__(self, f):
        f = list(f)
        n = len(f)
        if n == 0 or any(fi.nvars != n for fi in f):
            raise ValueError("need n polynomials in n variables")
        self.system = f
        self.field = f[0].field
        self.variables = f[0].variables
        self.doubled = doubled_variables(self.variables)
        ring = self.doubled
        X = [MultiPoly.variable(self.field, ring, v) for v in ring[:n]]
        Y = [MultiPoly.variable(self.field, ring, v) for v in ring[n:]]
        # f_i(Y_1..Y_j, X_{j+1}..X_n) for j = 0..n
        partial = []
        for fi in f:
            row = []
            for j in range(n + 1):
                positions = [t + n if t < j else t for t in range(n)]
                row.append(fi.remap(ring, positions))
            partial.append(row)
        self.matrix = [
            [exact_divide(partial[i][j] - partial[i][j + 1], X[j] - Y[j]) for j in range(n)]
            for i in range(n)
        ]
        self.poly = poly_det(self.matrix)

    def diagonal_restriction(self):
        """``Delta(x, x)`` as a polynomial in the original variables."""
        n = len(self.variables)
        return self.poly.remap(self.variables, list(range(n)) * 2)


def bezoutian(f):
    return Bezoutian(f)


def coefficient_matrix(bez, A):
    """``B`` with ``Delta = sum B_ij e_i(X) e_j(Y)`` modulo ``f(X), f(Y)``."""
    n = A.nvars
    m = A.dim
    B = linalg.zeros(A.field.zero, m, m)
    delta = bez.poly if bez.field == A.field else bez.poly.base_change(A.field)
    for exps, c in delta.terms.items():
        u = A.monomial_normal_form(exps[:n])
        v = A.monomial_normal_form(exps[n:])
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            cu = c * ui
            row = B[i]
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    row[j] = row[j] + cu * vj
    return B


def duality_functional(B, A):
    """Row vector ``lam = coords(1) B^-1``."""
    try:
        Binv = linalg.inverse(B)
    except DivisionByZero:
        raise SingularBezoutian(
            "Bézoutian coefficient matrix is singular; the zeros are not isolated"
        ) from None
    return linalg.vecmat(A.one(), Binv)


def gram_from_functional(lam, A):
    m = A.dim
    G = linalg.zeros(A.field.zero, m, m)
    for i in range(m):
        for j in range(i, m):
            e = tuple(a + b for a, b in zip(A.std_basis[i], A.std_basis[j]))
            val = linalg.dot(lam, A.monomial_normal_form(e))
            G[i][j] = val
            G[j][i] = val
    labels = [MultiPoly.monomial(A.field, A.variables, e).to_string() for e in A.std_basis]
    return GramMatrix(A.field, G, labels)


def gram_global(f, A, bez=None):
    """Gram matrix of the global Scheja-Storch form in the standard basis."""
    if bez is None:
        bez = Bezoutian(f)
    B = coefficient_matrix(bez, A)
    lam = duality_functional(B, A)
    return gram_from_functional(lam, A)


def gram_local(f, A, local_factor, global_gram=None):
    """Restriction of the global form to the local factor's basis."""
    G = global_gram if global_gram is not None else gram_global(f, A)
    U = local_factor.local_basis
    GU = [linalg.matvec(G.entries, u) for u in U]
    entries = [[linalg.dot(u, gv) for gv in GU] for u in U]
    result = GramMatrix(A.field, entries)
    if not entries or linalg.det(entries).is_zero():
        raise DegenerateRestriction("restriction of the global form to the local factor is degenerate")
    return result
