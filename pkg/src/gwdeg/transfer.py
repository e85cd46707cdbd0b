"""Transfer of bilinear forms along a finite separable extension.

A form ``b`` over ``L`` becomes the form ``Tr_{L/k} o b`` on ``L^m``
viewed as a ``k``-space of dimension ``d m``.
"""

from dataclasses import dataclass

from .errors import DescriptorMismatch
from .fields import FieldDescriptor
from .gw import GramMatrix, GWClass, diagonalize


@dataclass(frozen=True)
class TransferContext:
    lower: FieldDescriptor
    upper: FieldDescriptor

    def __post_init__(self):
        if self.upper != self.lower and not (
            self.upper.is_extension and self.upper.base_field == self.lower
        ):
            raise DescriptorMismatch(f"{self.upper} is not a simple extension of {self.lower}")

    @property
    def degree(self):
        return 1 if self.upper == self.lower else self.upper.degree

    def default_basis(self):
        if self.upper == self.lower:
            return [self.upper.one]
        return self.upper.power_basis()

    def trace(self, x):
        if self.upper == self.lower:
            return x
        return x.trace()


def trace_form(G, ctx, basis=None):
    """Gram matrix over ``ctx.lower`` of the trace of ``G``.

    Rows are indexed by ``(a, i)`` with ``a`` running over the ``k``-basis of
    ``L`` (default: powers of the generator) and ``i`` over the rows of ``G``;
    ``a`` is the slow index.
    """
    if G.field != ctx.upper:
        raise DescriptorMismatch(f"Gram matrix over {G.field}, expected {ctx.upper}")
    if basis is None:
        basis = ctx.default_basis()
    if len(basis) != ctx.degree:
        raise ValueError(f"need {ctx.degree} basis elements")
    m = G.size
    idx = [(a, i) for a in range(len(basis)) for i in range(m)]
    products = {}
    entries = [[None] * len(idx) for _ in idx]
    for r, (a, i) in enumerate(idx):
        for c in range(r, len(idx)):
            b, j = idx[c]
            key = (min(a, b), max(a, b))
            if key not in products:
                products[key] = basis[a] * basis[b]
            val = ctx.trace(products[key] * G.entries[i][j])
            entries[r][c] = val
            entries[c][r] = val
    labels = None
    if G.labels is not None:
        labels = [f"{basis[a]}*({G.labels[i]})" for a, i in idx]
    return GramMatrix(ctx.lower, entries, labels)


def transfer_class(c, ctx):
    """``Tr_{L/k}`` of a GW class over ``L``, as a diagonal class over ``k``."""
    if c.field != ctx.upper:
        raise DescriptorMismatch(f"class over {c.field}, expected {ctx.upper}")
    if c.rank == 0:
        return GWClass(ctx.lower, [])
    return diagonalize(trace_form(c.gram(), ctx)).gw_class
