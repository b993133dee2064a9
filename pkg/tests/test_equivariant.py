import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gysinkit.complexes import SimplicialComplex, cohomology, disjoint_union
from gysinkit.equivariant import (
    Involution,
    MalformedInvolutionError,
    NonRegularActionError,
    antisym_of_fixed_set,
    quotient_complex,
    regularity_violation,
    split_involution,
)
from gysinkit.fixtures import antipodal_icosahedron, circle, projective_plane, sphere
from gysinkit.graded import GradedDims

from spaces import random_complex, random_z2_complex

seeds = st.integers(0, 2 ** 32)


def cochain_lefschetz(inv: Involution) -> int:
    """sum_k (-1)^k trace of the involution on k-cochains."""
    total = 0
    for s in inv.carrier:
        image = [inv.vertex_map[v] for v in s]
        if sorted(image) != list(s):
            continue
        inversions = sum(1 for i in range(len(image)) for j in range(i + 1, len(image)) if image[i] > image[j])
        total += (-1) ** (len(s) - 1) * (-1) ** inversions
    return total


def test_identity_involution():
    for x in (sphere(2), projective_plane(), circle()):
        sp = split_involution(Involution.trivial(x))
        assert sp.antisymmetric.is_zero()
        assert sp.symmetric == cohomology(x).dims
        assert quotient_complex(Involution.trivial(x)) == x


def test_antipodal_sphere():
    sp = split_involution(antipodal_icosahedron())
    assert sp.symmetric == GradedDims.from_list([1, 0, 0])
    assert sp.antisymmetric == GradedDims.from_list([0, 0, 1])


def test_antipodal_quotient_is_projective_plane():
    q = quotient_complex(antipodal_icosahedron())
    assert len(q.vertices) == 6
    assert q.f_vector() == projective_plane().f_vector()
    assert cohomology(q).dims == GradedDims.from_list([1, 0, 0])


def test_swap_on_two_circles():
    x = disjoint_union(circle(), circle())
    swap = Involution.from_pairs(x, [(0, 3), (1, 4), (2, 5)])
    sp = split_involution(swap)
    assert sp.symmetric == GradedDims.from_list([1, 1])
    assert sp.antisymmetric == GradedDims.from_list([1, 1])
    assert quotient_complex(swap) == circle()


def test_exotic_term_examples():
    four = SimplicialComplex([(0,), (1,), (2,), (3,)])
    assert antisym_of_fixed_set(four, Involution.from_pairs(four, [(0, 1), (2, 3)])) == GradedDims({0: 2})
    empty = SimplicialComplex()
    assert antisym_of_fixed_set(empty, Involution(empty)).is_zero()
    hexagon = circle(6)
    deck = Involution.from_pairs(hexagon, [(0, 3), (1, 4), (2, 5)])
    assert antisym_of_fixed_set(hexagon, deck).is_zero()
    with pytest.raises(MalformedInvolutionError):
        antisym_of_fixed_set(circle(), deck)


def test_malformed_involutions():
    x = circle(4)
    with pytest.raises(MalformedInvolutionError, match="not involutive"):
        Involution(x, {0: 1, 1: 2, 2: 0})
    with pytest.raises(MalformedInvolutionError, match="not mapped to a simplex"):
        Involution.from_pairs(x, [(0, 1)])
    with pytest.raises(MalformedInvolutionError):
        Involution.from_pairs(x, [(0, 2), (0, 3)])


def test_non_regular_action_names_simplex():
    square = circle(4)
    flip = Involution.from_pairs(square, [(1, 3)])
    assert regularity_violation(flip) is None
    assert quotient_complex(flip) == SimplicialComplex.closure([(0, 1), (1, 2)])
    # half-turn: both edge orbits land on the single edge (0, 1)
    half_turn = Involution.from_pairs(square, [(0, 2), (1, 3)])
    assert regularity_violation(half_turn) is not None
    assert split_involution(half_turn).symmetric == GradedDims.from_list([1, 1])
    edge = SimplicialComplex.closure([(0, 1)])
    swap = Involution.from_pairs(edge, [(0, 1)])
    with pytest.raises(NonRegularActionError) as info:
        quotient_complex(swap)
    assert info.value.simplex == (0, 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.booleans())
def test_split_adds_up_and_matches_trace_formula(seed, mixed):
    inv = random_z2_complex(random.Random(seed), mixed=mixed)
    sp = split_involution(inv)
    h = cohomology(inv.carrier).dims
    for k in range(inv.carrier.dimension + 1):
        assert sp.symmetric[k] + sp.antisymmetric[k] == h[k]
    lefschetz = sum((-1) ** k * (sp.symmetric[k] - sp.antisymmetric[k]) for k in range(inv.carrier.dimension + 1))
    assert lefschetz == cochain_lefschetz(inv)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_quotient_matches_symmetric_part(seed):
    inv = random_z2_complex(random.Random(seed), n_fixed=1, mixed=False)
    if regularity_violation(inv) is not None:
        with pytest.raises(NonRegularActionError):
            quotient_complex(inv)
        return
    assert cohomology(quotient_complex(inv)).dims == split_involution(inv).symmetric


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_swap_on_double_gives_antisymmetric_copy(seed):
    x = random_complex(random.Random(seed))
    n = max(x.vertices) + 1
    xx = disjoint_union(x, x)
    swap = Involution.from_pairs(xx, [(v, v + n) for v in x.vertices])
    sp = split_involution(swap)
    assert sp.antisymmetric == cohomology(x).dims
    assert sp.symmetric == cohomology(x).dims
    assert cohomology(quotient_complex(swap)).dims == cohomology(x).dims
