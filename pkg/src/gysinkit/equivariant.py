"""Simplicial involutions: the induced map on cohomology, its +1/-1
eigenspace splitting, and orbit complexes of regular actions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .complexes import CohomologyResult, SimplicialComplex, cohomology, induced_map
from .exactla import RationalMatrix, eigenspace_dims
from .graded import GradedDims

__all__ = [
    "Involution",
    "SplitCohomology",
    "MalformedInvolutionError",
    "NonRegularActionError",
    "induced_involution",
    "split_involution",
    "quotient_complex",
    "regularity_violation",
    "antisym_of_fixed_set",
]


class MalformedInvolutionError(ValueError):
    pass


class NonRegularActionError(ValueError):
    def __init__(self, message: str, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class Involution:
    """Simplicial automorphism of order at most two.

    ``vertex_map`` may omit fixed vertices.
    """

    __slots__ = ("carrier", "vertex_map")

    def __init__(self, carrier: SimplicialComplex, vertex_map: Mapping[int, int] | None = None):
        verts = set(carrier.vertices)
        full = {v: v for v in verts}
        for a, b in (vertex_map or {}).items():
            if a not in verts or b not in verts:
                raise MalformedInvolutionError(f"{a} -> {b} mentions a vertex outside the carrier")
            full[a] = b
        for a, b in full.items():
            if full[b] != a:
                raise MalformedInvolutionError(f"not involutive: {a} -> {b} -> {full[b]}")
        for s in carrier.simplices:
            if tuple(sorted(full[v] for v in s)) not in carrier:
                raise MalformedInvolutionError(f"simplex {s} is not mapped to a simplex")
        self.carrier = carrier
        self.vertex_map = dict(sorted(full.items()))

    @classmethod
    def from_pairs(cls, carrier: SimplicialComplex, pairs: Iterable[tuple[int, int]]) -> Involution:
        m: dict[int, int] = {}
        for a, b in pairs:
            for u, v in ((a, b), (b, a)):
                if m.get(u, v) != v:
                    raise MalformedInvolutionError(f"vertex {u} is paired twice")
                m[u] = v
        return cls(carrier, m)

    @classmethod
    def trivial(cls, carrier: SimplicialComplex) -> Involution:
        return cls(carrier)

    @property
    def is_trivial(self) -> bool:
        return all(a == b for a, b in self.vertex_map.items())

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.vertex_map.items() if a < b]

    def image(self, s) -> tuple:
        return tuple(sorted(self.vertex_map[v] for v in s))

    def __repr__(self):
        return f"Involution({self.carrier!r}, pairs={self.pairs()})"


@dataclass(frozen=True)
class SplitCohomology:
    symmetric: GradedDims
    antisymmetric: GradedDims


def induced_involution(inv: Involution, h: CohomologyResult | None = None) -> dict[int, RationalMatrix]:
    h = h or cohomology(inv.carrier)
    return induced_map(inv.vertex_map, inv.carrier, inv.carrier, h, h)


def split_involution(inv: Involution) -> SplitCohomology:
    h = cohomology(inv.carrier)
    sym, anti = {}, {}
    for k, m in induced_involution(inv, h).items():
        sym[k] = eigenspace_dims(m, 1)
        anti[k] = eigenspace_dims(m, -1)
    return SplitCohomology(GradedDims(sym), GradedDims(anti))


def antisym_of_fixed_set(k: SimplicialComplex, inv: Involution) -> GradedDims:
    """Antisymmetric part of ``H^*(k)``, unshifted."""
    if inv.carrier != k:
        raise MalformedInvolutionError("involution is not defined on the given complex")
    return split_involution(inv).antisymmetric


def _orbit_label(inv: Involution) -> dict[int, int]:
    return {v: min(v, w) for v, w in inv.vertex_map.items()}


def regularity_violation(inv: Involution) -> tuple | None:
    """First simplex that keeps the orbit complex from modelling the quotient.

    Two ways to fail: a simplex containing a vertex and its partner (it
    would collapse), or two simplices from different orbits with the same
    orbit image (the quotient would glue them).
    """
    label = _orbit_label(inv)
    seen: dict[tuple, tuple] = {}
    for s in inv.carrier:
        img = tuple(sorted({label[v] for v in s}))
        if len(img) < len(s):
            return s
        rep = min(s, inv.image(s))
        other = seen.setdefault(img, rep)
        if other != rep:
            return s
    return None


def quotient_complex(inv: Involution) -> SimplicialComplex:
    """Orbit complex on vertex orbits, labelled by the smaller vertex."""
    bad = regularity_violation(inv)
    if bad is not None:
        raise NonRegularActionError(f"action is not regular at simplex {bad}; subdivide first", bad)
    label = _orbit_label(inv)
    return SimplicialComplex(tuple(label[v] for v in s) for s in inv.carrier)
