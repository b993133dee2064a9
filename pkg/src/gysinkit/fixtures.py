"""Orbit data of the worked S^3-manifold examples.

Every fixture records the Poincare polynomials its Gysin sequence must
solve to.  Orbit spaces that are circles use the boundary of a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

from .complexes import SimplicialComplex, SimplicialPair, disjoint_union
from .equivariant import Involution
from .graded import GradedDims
from .gysin import GysinInput

__all__ = [
    "FIXTURES",
    "FixtureInfo",
    "fixture",
    "fixture_info",
    "point",
    "circle",
    "sphere",
    "projective_plane",
    "icosahedron",
    "antipodal_icosahedron",
]


def point() -> SimplicialComplex:
    return SimplicialComplex([(0,)])


def circle(n: int = 3) -> SimplicialComplex:
    return SimplicialComplex.closure((i, (i + 1) % n) for i in range(n))


def sphere(d: int) -> SimplicialComplex:
    """Boundary of the ``(d+1)``-simplex."""
    verts = range(d + 2)
    return SimplicialComplex.closure(tuple(v for v in verts if v != skip) for skip in verts)


def projective_plane() -> SimplicialComplex:
    """Six-vertex triangulation of RP^2."""
    return SimplicialComplex.closure([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    ])


def _icosahedron_vertices() -> list[tuple[float, float, float]]:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a, b in product((1, -1), repeat=2):
        pts += [(0.0, a, b * phi), (a, b * phi, 0.0), (b * phi, 0.0, a)]
    return sorted(pts)


def icosahedron() -> SimplicialComplex:
    """Boundary of the icosahedron: 12 vertices, 30 edges, 20 triangles."""
    pts = _icosahedron_vertices()

    def adjacent(i, j):
        return sum((x - y) ** 2 for x, y in zip(pts[i], pts[j])) < 5

    return SimplicialComplex.closure(
        t for t in combinations(range(12), 3)
        if adjacent(t[0], t[1]) and adjacent(t[1], t[2]) and adjacent(t[0], t[2]))


def antipodal_icosahedron() -> Involution:
    pts = _icosahedron_vertices()
    index = {p: i for i, p in enumerate(pts)}
    anti = {i: index[tuple(-x + 0.0 for x in p)] for i, p in enumerate(pts)}
    return Involution(icosahedron(), anti)


def _empty() -> SimplicialComplex:
    return SimplicialComplex()


def _cp2_sum() -> GysinInput:
    interval = SimplicialComplex.closure([(0, 1)])
    ends = SimplicialComplex([(0,), (1,)])
    # {N,S} x {0,1}: 0=(N,0) 1=(S,0) 2=(N,1) 3=(S,1); j swaps the poles
    poles = SimplicialComplex([(0,), (1,), (2,), (3,)])
    return GysinInput(SimplicialPair(interval, ends), poles,
                      Involution.from_pairs(poles, [(0, 1), (2, 3)]), 4, {0: 1, 4: 1}, "cp2_sum")


def _s3_x_s1() -> GysinInput:
    q = circle()
    return GysinInput(SimplicialPair(q, _empty()), _empty(), Involution(_empty()), 4,
                      {0: 1, 4: 1}, "s3_x_s1")


def _s2_x_s1_trivial() -> GysinInput:
    q = circle()
    poles = disjoint_union(circle(), circle())
    swap = Involution.from_pairs(poles, [(0, 3), (1, 4), (2, 5)])
    return GysinInput(SimplicialPair(q, q), poles, swap, 3, {0: 1, 3: 1}, "s2_x_s1_trivial")


def _s2_x_s1_twisted() -> GysinInput:
    q = circle()
    poles = circle(6)
    deck = Involution.from_pairs(poles, [(0, 3), (1, 4), (2, 5)])
    return GysinInput(SimplicialPair(q, q), poles, deck, 3, {0: 1}, "s2_x_s1_twisted")


def _rp2_x_s1() -> GysinInput:
    q = circle()
    fixed = circle()
    return GysinInput(SimplicialPair(q, q), fixed, Involution(fixed), 3, {0: 1}, "rp2_x_s1")


def _ineffective_s1() -> GysinInput:
    q = circle()
    fixed = circle()
    return GysinInput(SimplicialPair(q, q), fixed, Involution(fixed), 1, {0: 1, 1: 1},
                      "ineffective_s1")


def _hopf_like_free() -> GysinInput:
    return GysinInput(SimplicialPair(sphere(4), _empty()), _empty(), Involution(_empty()), 7,
                      {}, "hopf_like_free")


@dataclass(frozen=True)
class FixtureInfo:
    build: Callable[[], GysinInput]
    expected: tuple
    description: str


def _p(*coeffs: int) -> GradedDims:
    return GradedDims.from_list(coeffs)


FIXTURES: dict[str, FixtureInfo] = {
    "cp2_sum": FixtureInfo(
        _cp2_sum, (_p(1, 0, 2, 0, 1),),
        "CP2 # CP2 with orbit space [0,1]; j swaps the poles of the S^2-orbits over the ends"),
    "s3_x_s1": FixtureInfo(
        _s3_x_s1, (_p(1, 1, 0, 1, 1),),
        "S^3 x S^1, free action: all orbits 3-dimensional"),
    "s2_x_s1_trivial": FixtureInfo(
        _s2_x_s1_trivial, (_p(1, 1, 1, 1),),
        "S^2 x S^1: S^2-orbits, M^S1 a trivial double cover of the orbit circle"),
    "s2_x_s1_twisted": FixtureInfo(
        _s2_x_s1_twisted, (_p(1, 1),),
        "S^2 x_Z2 S^1: S^2-orbits, M^S1 the connected double cover of the orbit circle"),
    "rp2_x_s1": FixtureInfo(
        _rp2_x_s1, (_p(1, 1),),
        "RP^2 x S^1: RP^2-orbits, one S^1-fixed point per orbit, j acting trivially"),
    "ineffective_s1": FixtureInfo(
        _ineffective_s1, (_p(1, 1),),
        "S^1 with the trivial action: every point fixed"),
    "hopf_like_free": FixtureInfo(
        _hopf_like_free, (_p(1, 0, 0, 0, 0, 0, 0, 1), _p(1, 0, 0, 1, 1, 0, 0, 1)),
        "free action over an S^4 orbit space, dim M = 7, nothing pinned; the Euler map "
        "rank is invisible to dimension counting"),
}


def fixture_info(name: str) -> FixtureInfo:
    try:
        return FIXTURES[name]
    except KeyError:
        raise LookupError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None


def fixture(name: str) -> GysinInput:
    return fixture_info(name).build()
