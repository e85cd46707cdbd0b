"""Exact dense linear algebra on list-of-rows matrices.

Entries are exact field scalars (``FieldElement`` or ``Fraction``).  Every
routine is plain Gaussian elimination; sizes here are tens, not thousands.
"""

from .errors import DivisionByZero


def zeros(zero, rows, cols):
    return [[zero] * cols for _ in range(rows)]


def identity(zero, one, n):
    m = zeros(zero, n, n)
    for i in range(n):
        m[i][i] = one
    return m


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    if not a:
        return []
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(a, v):
    out = []
    for row in a:
        acc = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            acc = acc + x * y
        out.append(acc)
    return out


def vecmat(v, a):
    return matvec(transpose(a), v)


def dot(u, v):
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def rref(a):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    m = [list(r) for r in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def det(a):
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        raise ValueError("determinant of an empty matrix")
    result = m[0][0] * 0 + 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return result * 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result = result * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a):
    n = len(a)
    zero = a[0][0] * 0
    one = zero + 1
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("matrix is singular")
    return [row[n:] for row in r]


def column_space_basis(a):
    """Columns of ``a`` at pivot positions, as vectors."""
    _, pivots = rref(a)
    return [[row[c] for row in a] for c in pivots]


def nullspace(a):
    """Basis of ``{v : a v = 0}``."""
    r, pivots = rref(a)
    cols = len(a[0])
    zero = a[0][0] * 0
    one = zero + 1
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [zero] * cols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][free]
        basis.append(v)
    return basis


def is_symmetric(a):
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def congruent(p, g):
    """``Pᵀ G P``."""
    return matmul(matmul(transpose(p), g), p)
