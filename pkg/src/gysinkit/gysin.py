"""Gysin sequence of an S^3-manifold from its orbit data.

The sequence reads, for every degree ``i``::

    H^i(M) -> H^{i-3}(M/S3, Sigma/S3) + (H^{i-2}(M^S1))^- -> H^{i+1}(M/S3) -> H^{i+1}(M)

where ``(.)^-`` is the antisymmetric part under the involution induced by
``j``.  ``M`` itself is never built: its cohomology is either supplied or
solved for from exactness.  All degree shifts live in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complexes import SimplicialComplex, SimplicialPair, cohomology, relative_cohomology
from .equivariant import Involution, MalformedInvolutionError, antisym_of_fixed_set
from .graded import GradedDims
from .lesolve import ExactSequenceTemplate, Slot, SolveReport, solve_dims

__all__ = [
    "GysinInput",
    "GysinReport",
    "assemble",
    "e2_rows",
    "duality_report",
    "reduced_gysin_template",
]


@dataclass(frozen=True)
class GysinInput:
    """Orbit data of a smooth S^3-action.

    ``orbit_pair`` models ``(M/S3, Sigma/S3)``; ``fixed_circle_set`` models
    ``M^S1`` with ``j_involution`` acting on it; ``degree_bound`` is
    ``dim M``.  ``total_dims`` pins known values of ``dim H^k(M)``; every
    other degree up to ``degree_bound`` is unknown.
    """

    orbit_pair: SimplicialPair
    fixed_circle_set: SimplicialComplex
    j_involution: Involution
    degree_bound: int
    total_dims: Mapping[int, int] = field(default_factory=dict)
    name: str | None = None

    def __post_init__(self):
        if self.j_involution.carrier != self.fixed_circle_set:
            raise MalformedInvolutionError("j_involution must act on fixed_circle_set")
        if self.degree_bound < 0:
            raise ValueError("degree_bound must be nonnegative")
        pins = dict(sorted((int(k), int(v)) for k, v in dict(self.total_dims).items()))
        for k, v in pins.items():
            if k < 0 or v < 0:
                raise ValueError(f"invalid known dimension H^{k} = {v}")
            if k > self.degree_bound and v:
                raise ValueError(f"H^{k} = {v} lies above dim M = {self.degree_bound}")
        object.__setattr__(self, "total_dims", pins)

    def with_known(self, known: Mapping[int, int]) -> GysinInput:
        pins = dict(self.total_dims)
        pins.update(known)
        return GysinInput(self.orbit_pair, self.fixed_circle_set, self.j_involution,
                          self.degree_bound, pins, self.name)


@dataclass(frozen=True)
class GysinReport:
    input: GysinInput
    template: ExactSequenceTemplate
    orbit_dims: GradedDims
    relative_dims: GradedDims
    antisymmetric_dims: GradedDims
    middle_dims: GradedDims
    solve: SolveReport
    e2_rows: tuple
    duality_obstructed: bool

    def total_profiles(self) -> list[GradedDims]:
        """Every feasible ``H^*(M)``, sorted by dimension vector."""
        positions = {i: s.degree for i, s in enumerate(self.template.slots) if s.kind == "total"}
        out = []
        for dims in self.solve.completed_dims(self.template):
            out.append(GradedDims({positions[i]: d for i, d in enumerate(dims) if i in positions}))
        return sorted(out, key=lambda g: g.as_list(self.input.degree_bound + 1))

    def poincare_polynomials(self) -> list[str]:
        return [g.poincare() for g in self.total_profiles()]


def _last_degree(degree_bound: int, *parts: tuple[GradedDims, int]) -> int:
    # first i at which H^i(M), the middle term and H^{i+1}(Q) all vanish
    tops = [degree_bound] + [g.top + shift for g, shift in parts if not g.is_zero()]
    return max(tops) + 1


def _build_template(q: GradedDims, middle: GradedDims, last: int, degree_bound: int,
                    pins: Mapping[int, int], middle_label: str) -> ExactSequenceTemplate:
    slots = []
    for i in range(-1, last + 1):
        if i < 0 or i > degree_bound:
            total = 0
        else:
            total = pins.get(i)
        slots.append(Slot(f"H^{i}(M)", total, degree=i, kind="total"))
        slots.append(Slot(middle_label.format(i=i, r=i - 3, a=i - 2), middle[i] if i >= 0 else 0,
                          degree=i, kind="middle"))
        slots.append(Slot(f"H^{i + 1}(Q)", q[i + 1], degree=i + 1, kind="orbit"))
    return ExactSequenceTemplate(tuple(slots))


def _shift(g: GradedDims, s: int) -> GradedDims:
    return GradedDims({k + s: v for k, v in g.items()})


def assemble(g: GysinInput) -> GysinReport:
    q = cohomology(g.orbit_pair.total).dims
    rel = relative_cohomology(g.orbit_pair).dims
    anti = antisym_of_fixed_set(g.fixed_circle_set, g.j_involution)
    middle = _shift(rel, 3) + _shift(anti, 2)
    last = _last_degree(g.degree_bound, (q, -1), (middle, 0))
    template = _build_template(q, middle, last, g.degree_bound, g.total_dims,
                               "H^{r}(Q,S)+A^{a}")
    rows = (q, GradedDims(), anti, rel)
    return GysinReport(
        input=g,
        template=template,
        orbit_dims=q,
        relative_dims=rel,
        antisymmetric_dims=anti,
        middle_dims=middle,
        solve=solve_dims(template),
        e2_rows=rows,
        duality_obstructed=not anti.is_zero(),
    )


def reduced_gysin_template(orbit_pair: SimplicialPair, degree_bound: int,
                           total_dims: Mapping[int, int] | None = None) -> ExactSequenceTemplate:
    """Sequence ``H^i(M) -> H^{i-3}(Q, A) -> H^{i+1}(Q) -> H^{i+1}(M)``.

    With ``A`` the image of the S^3-fixed set this is the semi-free
    sequence; with ``A = Sigma/S3`` it is the sequence for actions without
    S^1-conjugate isotropy.  No exotic summand appears in either.
    """
    q = cohomology(orbit_pair.total).dims
    rel = relative_cohomology(orbit_pair).dims
    middle = _shift(rel, 3)
    last = _last_degree(degree_bound, (q, -1), (middle, 0))
    return _build_template(q, middle, last, degree_bound, dict(total_dims or {}), "H^{r}(Q,A)")


def e2_rows(g: GysinInput) -> tuple[GradedDims, GradedDims, GradedDims, GradedDims]:
    """Rows ``q = 0..3`` of the E_2 term: ``H^*(Q)``, zero, the antisymmetric
    part of ``H^*(M^S1)`` and ``H^*(Q, Sigma/S3)``, all unshifted."""
    q = cohomology(g.orbit_pair.total).dims
    rel = relative_cohomology(g.orbit_pair).dims
    anti = antisym_of_fixed_set(g.fixed_circle_set, g.j_involution)
    return q, GradedDims(), anti, rel


def duality_report(g: GysinInput) -> tuple[bool, str]:
    anti = antisym_of_fixed_set(g.fixed_circle_set, g.j_involution)
    if anti.is_zero():
        return False, "not obstructed: the exotic term vanishes"
    degrees = ", ".join(str(k) for k, _ in anti.items())
    return True, f"obstructed: exotic term nonzero in fixed-set degree {degrees}"
