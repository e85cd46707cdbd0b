"""Local A1-degrees at finite separable points, by two independent routes.

*Direct*: localise ``k[x]/(f)`` at the closed point ``p`` and take the
Scheja-Storch form of the local factor.

*Trace*: base-change ``f`` to ``L = k(p)``, compute the direct degree there
at the ``L``-rational point lying over ``p`` (same coordinates, now
rational), and push the resulting class down to ``k`` with the trace form.

The two routes share nothing below the polynomial layer: each builds its own
Gröbner basis, over ``k`` and over ``L`` respectively.
"""

import time
from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraPresentation, localize, separating_form
from .errors import MathError, NotAZero, ResidueFieldMismatch, ZeroJacobian
from .fields import FieldDescriptor, generated_subfield_degree
from .gw import GWClass, diagonalize, gw_equal, invariants
from .schejastorch import Bezoutian, gram_global, gram_local, jacobian_determinant
from .transfer import TransferContext, transfer_class


@dataclass
class PointSpec:
    """A closed point: its residue field and coordinates in that field."""

    residue_field: FieldDescriptor
    coords: tuple
    name: str = None

    def __post_init__(self):
        self.coords = tuple(self.residue_field(c) for c in self.coords)

    def degree_over(self, k):
        return 1 if self.residue_field == k else self.residue_field.degree

    def as_strings(self):
        return [str(c) for c in self.coords]


def canonical_point(p):
    """The point over ``k(p)`` lying above ``p``: same coordinates, now rational."""
    return PointSpec(p.residue_field, p.coords, p.name)


def check_point(f, p):
    """Validate that ``p`` is a zero of ``f`` whose coordinates generate its residue field."""
    k = f[0].field
    K = p.residue_field
    if K != k and not (K.is_extension and K.base_field == k):
        raise ResidueFieldMismatch(f"residue field {K} is not a simple extension of {k}")
    if len(p.coords) != f[0].nvars:
        raise ResidueFieldMismatch(
            f"point has {len(p.coords)} coordinates, system has {f[0].nvars} variables"
        )
    for i, fi in enumerate(f):
        if not fi.evaluate(p.coords).is_zero():
            raise NotAZero(f"f{i + 1} does not vanish at the point")
    d = p.degree_over(k)
    if d > 1:
        got = generated_subfield_degree(p.coords, K)
        if got != d:
            raise ResidueFieldMismatch(
                f"coordinates generate a subfield of degree {got}, declared residue field has degree {d}"
            )


@dataclass
class PipelineResult:
    gw_class: GWClass
    local_dim: int
    algebra_dim: int
    separating_form: str
    gram: object
    seconds: float
    inner: "PipelineResult" = None


def direct_pipeline(f, p, seed=0):
    start = time.perf_counter()
    check_point(f, p)
    A = AlgebraPresentation(f)
    sf = separating_form(A, p, seed)
    lf = localize(A, p, sf)
    G = gram_local(f, A, lf, gram_global(f, A, Bezoutian(f)))
    cls = diagonalize(G).gw_class
    return PipelineResult(
        cls, lf.local_dim, A.dim, sf.describe(), G, time.perf_counter() - start
    )


def trace_pipeline(f, p, seed=0):
    start = time.perf_counter()
    k = f[0].field
    check_point(f, p)
    L = p.residue_field
    f_L = [fi.base_change(L) for fi in f]
    inner = direct_pipeline(f_L, canonical_point(p), seed)
    cls = transfer_class(inner.gw_class, TransferContext(k, L))
    return PipelineResult(
        cls,
        p.degree_over(k) * inner.local_dim,
        inner.algebra_dim,
        inner.separating_form,
        inner.gram,
        time.perf_counter() - start,
        inner,
    )


def local_degree_direct(f, p, seed=0):
    return direct_pipeline(f, p, seed).gw_class


def local_degree_trace(f, p, seed=0):
    return trace_pipeline(f, p, seed).gw_class


@dataclass
class DegreeReport:
    field: FieldDescriptor
    point: PointSpec
    lhs: PipelineResult = None
    rhs: PipelineResult = None
    verdict: object = None
    errors: dict = dc_field(default_factory=dict)
    seed: int = 0

    @property
    def lhs_invariants(self):
        return invariants(self.lhs.gw_class) if self.lhs else None

    @property
    def rhs_invariants(self):
        return invariants(self.rhs.gw_class) if self.rhs else None


def verify_trace_theorem(f, p, seed=0):
    """Run both pipelines and compare the resulting classes in GW(k)."""
    report = DegreeReport(f[0].field, p, seed=seed)
    try:
        report.lhs = direct_pipeline(f, p, seed)
    except MathError as exc:
        report.errors["direct"] = exc
    try:
        report.rhs = trace_pipeline(f, p, seed)
    except MathError as exc:
        report.errors["trace"] = exc
    if report.lhs is not None and report.rhs is not None:
        report.verdict = gw_equal(report.lhs.gw_class, report.rhs.gw_class)
    return report


def jacobian_class(f, p):
    """``<det Jf(p)>`` over the residue field of ``p``."""
    value = jacobian_determinant(f).evaluate(p.coords)
    if value.is_zero():
        raise ZeroJacobian("Jacobian determinant vanishes: the zero is not simple")
    return GWClass(p.residue_field, [value])


def jacobian_transfer(f, p):
    k = f[0].field
    return transfer_class(jacobian_class(f, p), TransferContext(k, p.residue_field))


@dataclass
class GlobalResult:
    gw_class: GWClass
    algebra_dim: int
    gram: object
    seconds: float


def global_pipeline(f):
    start = time.perf_counter()
    A = AlgebraPresentation(f)
    G = gram_global(f, A)
    return GlobalResult(diagonalize(G).gw_class, A.dim, G, time.perf_counter() - start)


def global_degree(f):
    return global_pipeline(f).gw_class
