"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  Coefficients may be any
exact field scalars supporting ``+ - * /`` and comparison with ``0``
(``FieldElement`` or ``Fraction``).
"""

from .errors import DivisionByZero


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    lead_inv = 1 / b[-1]
    q = [b[-1] * 0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * lead_inv
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = a[shift + j] - c * y
        a = trim(a)
    return trim(q), a


def rem(a, b):
    return divmod_(a, b)[1]


def monic(a):
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def gcd(a, b):
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    one = _one_like(a, b)
    r0, r1 = trim(a), trim(b)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def inverse_mod(a, m):
    g, s, _ = xgcd(a, m)
    if len(g) != 1:
        raise DivisionByZero("not invertible modulo the given polynomial")
    return rem(s, m)


def derivative(a):
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a, x):
    """Horner evaluation; ``x`` may live in a larger ring than the coefficients."""
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return x * 0
    return acc


def power(a, e):
    result = [_one_like(a)]
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def _one_like(*polys):
    for p in polys:
        if p:
            return p[-1] / p[-1]
    raise ValueError("cannot infer coefficient field from zero polynomials")
