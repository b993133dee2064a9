import pytest

from gysinkit.complexes import SimplicialComplex, SimplicialPair, cohomology, relative_cohomology
from gysinkit.equivariant import Involution, split_involution
from gysinkit.fixtures import FIXTURES, circle, fixture, fixture_info, sphere
from gysinkit.graded import GradedDims
from gysinkit.gysin import GysinInput, assemble, duality_report, e2_rows, reduced_gysin_template
from gysinkit.lesolve import alternating_sum_check


def unpinned(name):
    g = fixture(name)
    return GysinInput(g.orbit_pair, g.fixed_circle_set, g.j_involution, g.degree_bound, {}, name)


def test_free_circle_orbit_space_is_unique_without_pins():
    r = assemble(unpinned("s3_x_s1"))
    assert r.solve.unique
    assert r.poincare_polynomials() == ["1 + t + t^3 + t^4"]


def test_cp2_sum_with_only_h0_pinned():
    g = unpinned("cp2_sum").with_known({0: 1})
    r = assemble(g)
    assert r.total_profiles() == [GradedDims.from_list([1, 0, 2, 0, 1])]
    assert r.antisymmetric_dims == GradedDims({0: 2})
    # H^2(M) -> exotic term is the slot pair the isomorphism lives on
    slots = r.template.slots
    i = next(i for i, s in enumerate(slots) if s.kind == "total" and s.degree == 2)
    assert slots[i + 1].dim == 2 and slots[i - 1].dim == 0 and slots[i + 2].dim == 0


def test_degenerate_sequence_forces_orbit_cohomology():
    q = sphere(2)
    empty = SimplicialComplex()
    g = GysinInput(SimplicialPair(q, q), empty, Involution(empty), 3)
    r = assemble(g)
    assert r.middle_dims.is_zero()
    assert r.total_profiles() == [cohomology(q).dims]


def test_template_is_bounded_and_ordered():
    r = assemble(fixture("cp2_sum"))
    slots = r.template.slots
    assert slots[0].label == "H^-1(M)" and slots[0].dim == 0
    assert slots[-1].dim == 0
    kinds = [s.kind for s in slots]
    assert kinds[:6] == ["total", "middle", "orbit"] * 2
    assert [s.degree for s in slots if s.kind == "total"] == list(range(-1, len(slots) // 3 - 1))
    for s in slots:
        if s.kind == "total" and s.degree > 4:
            assert s.dim == 0


def test_middle_dims_identity():
    for name in FIXTURES:
        g = fixture(name)
        r = assemble(g)
        rel = relative_cohomology(g.orbit_pair).dims
        anti = split_involution(g.j_involution).antisymmetric
        for i in range(g.degree_bound + 4):
            expected = (rel[i - 3] if i >= 3 else 0) + (anti[i - 2] if i >= 2 else 0)
            assert r.middle_dims[i] == expected
        for s in r.template.slots:
            if s.kind == "middle" and s.degree >= 0:
                assert s.dim == r.middle_dims[s.degree]


def test_e2_rows():
    q0, q1, q2, q3 = e2_rows(fixture("cp2_sum"))
    assert q0 == GradedDims.from_list([1])
    assert q1.is_zero()
    assert q2 == GradedDims.from_list([2])
    assert q3 == GradedDims.from_list([0, 1])
    assert e2_rows(fixture("s3_x_s1"))[2].is_zero()
    rows = e2_rows(fixture("hopf_like_free"))
    assert rows[3] == rows[0]


def test_duality():
    obstructed, text = duality_report(fixture("cp2_sum"))
    assert obstructed and "degree 0" in text
    assert not duality_report(fixture("rp2_x_s1"))[0]
    assert not duality_report(fixture("s2_x_s1_twisted"))[0]
    assert assemble(fixture("cp2_sum")).duality_obstructed


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_solves_to_documented_polynomials(name):
    r = assemble(fixture(name))
    assert r.solve.consistent
    assert r.total_profiles() == list(fixture_info(name).expected)
    for dims in r.solve.completed_dims(r.template):
        full = r.template
        for pos, v in zip(r.solve.unknown, [dims[p] for p in r.solve.unknown]):
            full = full.with_dim(pos, v)
        assert alternating_sum_check(full)


def test_unknown_fixture():
    with pytest.raises(LookupError, match="unknown fixture"):
        fixture("k3")


def test_inconsistent_pins_reported():
    r = assemble(fixture("s3_x_s1").with_known({2: 1}))
    assert not r.solve.consistent
    assert r.total_profiles() == []


def test_input_validation():
    empty = SimplicialComplex()
    with pytest.raises(ValueError):
        GysinInput(SimplicialPair(circle()), empty, Involution(empty), 2, {5: 1})
    with pytest.raises(ValueError):
        GysinInput(SimplicialPair(circle()), circle(), Involution(empty), 2)


def test_semi_free_specialization():
    # two S^3-fixed points over the ends of an interval; j acts trivially on M^S1 = F
    interval = SimplicialComplex.closure([(0, 1)])
    ends = SimplicialComplex([(0,), (1,)])
    fixed = SimplicialComplex([(0,), (1,)])
    g = GysinInput(SimplicialPair(interval, ends), fixed, Involution(fixed), 4, {0: 1})
    expected = reduced_gysin_template(SimplicialPair(interval, ends), 4, {0: 1})
    assert assemble(g).template.signature() == expected.signature()


@pytest.mark.parametrize("name", ["rp2_x_s1", "ineffective_s1", "s2_x_s1_twisted"])
def test_no_conjugate_specialization(name):
    g = fixture(name)
    expected = reduced_gysin_template(g.orbit_pair, g.degree_bound, g.total_dims)
    assert assemble(g).template.signature() == expected.signature()


def test_exotic_term_breaks_specialization():
    g = fixture("cp2_sum")
    reduced = reduced_gysin_template(g.orbit_pair, g.degree_bound, g.total_dims)
    assert assemble(g).template.signature() != reduced.signature()
