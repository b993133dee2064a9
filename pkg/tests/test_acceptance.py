"""Exit criteria.  Each test prints one PASS/FAIL line; run with ``-s`` or
``python tests/test_acceptance.py`` to see them."""

import random
import sys
import time

import pytest

from gysinkit.complexes import (
    SimplicialComplex,
    SimplicialPair,
    cohomology,
    pair_long_exact_sequence,
)
from gysinkit.equivariant import Involution, quotient_complex, regularity_violation, split_involution
from gysinkit.fixtures import antipodal_icosahedron, fixture
from gysinkit.graded import GradedDims, kunneth_poly
from gysinkit.gysin import GysinInput, assemble, reduced_gysin_template
from gysinkit.lesolve import alternating_sum_check, check_exact

from spaces import random_complex, random_pair, random_z2_complex


@pytest.fixture
def report(capsys):
    def _report(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return _report


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_1_connected_sum_example(report):
    r, dt = timed(lambda: assemble(fixture("cp2_sum")))
    exotic = r.antisymmetric_dims
    profiles = [p.as_list(5) for p in r.total_profiles()]
    ok = exotic == GradedDims({0: 2}) and profiles == [[1, 0, 2, 0, 1]] and dt < 1.0
    report(1, ok, f"cp2_sum exotic term {exotic.as_list()} in degree 0, H*(M) {profiles}, {dt:.3f}s")


@pytest.mark.parametrize("name,expected", [
    ("s3_x_s1", "1 + t + t^3 + t^4"),
    ("s2_x_s1_trivial", "1 + t + t^2 + t^3"),
    ("s2_x_s1_twisted", "1 + t"),
    ("rp2_x_s1", "1 + t"),
    ("ineffective_s1", "1 + t"),
])
def test_2_circle_orbit_space_classification(report, name, expected):
    r, dt = timed(lambda: assemble(fixture(name)))
    polys = r.poincare_polynomials()
    ok = r.solve.consistent and polys == [expected] and dt < 1.0
    report(2, ok, f"{name} -> {polys} (expected unique {expected}), {dt:.3f}s")


def test_3_pair_sequences_exact(report):
    start = time.perf_counter()
    failures, sizes = 0, []
    for seed in range(60):
        p = random_pair(random.Random(seed), max_simplices=40)
        sizes.append(len(p.total))
        t = pair_long_exact_sequence(p)
        if not all(check_exact(t)) or not alternating_sum_check(t):
            failures += 1
    dt = time.perf_counter() - start
    ok = failures == 0 and max(sizes) <= 40 and dt < 30.0
    report(3, ok, f"60 random pairs (<= {max(sizes)} simplices): {failures} failures, {dt:.2f}s")


def test_4_splitting_identity(report):
    failures, regular = 0, 0
    for seed in range(80):
        inv = random_z2_complex(random.Random(seed), n_fixed=seed % 3, mixed=seed % 2 == 0)
        sp = split_involution(inv)
        h = cohomology(inv.carrier).dims
        if any(sp.symmetric[k] + sp.antisymmetric[k] != h[k] for k in range(inv.carrier.dimension + 1)):
            failures += 1
        if regularity_violation(inv) is None:
            regular += 1
            if cohomology(quotient_complex(inv)).dims != sp.symmetric:
                failures += 1
    ok = failures == 0 and regular >= 20
    report(4, ok, f"80 random Z2-complexes ({regular} regular): {failures} failures")


def test_5_antipodal_sign_structure(report):
    sp = split_involution(antipodal_icosahedron())
    sym, anti = sp.symmetric.as_list(3), sp.antisymmetric.as_list(3)
    ok = sym == [1, 0, 0] and anti == [0, 0, 1]
    report(5, ok, f"antipodal S^2: symmetric {sym}, antisymmetric {anti}")


def test_6_kunneth(report):
    product = kunneth_poly(GradedDims.from_list([1, 0, 1]), GradedDims.from_list([1, 1]))
    failures = 0
    for seed in range(12):
        rng = random.Random(1000 + seed)
        p = cohomology(random_complex(rng)).dims
        q = cohomology(random_complex(rng)).dims
        if kunneth_poly(p, q).evaluate(-1) != p.euler_characteristic() * q.euler_characteristic():
            failures += 1
    ok = product.poincare() == "1 + t + t^2 + t^3" and failures == 0
    report(6, ok, f"(1+t^2)(1+t) = {product.poincare()}; 12 random Euler products: {failures} failures")


def test_7_specializations(report):
    interval = SimplicialComplex.closure([(0, 1)])
    ends = SimplicialComplex([(0,), (1,)])
    semi_free = GysinInput(SimplicialPair(interval, ends), ends, Involution(ends), 4, {0: 1})
    same_ii = (assemble(semi_free).template.signature()
               == reduced_gysin_template(semi_free.orbit_pair, 4, {0: 1}).signature())
    same_iii = []
    for name in ("rp2_x_s1", "ineffective_s1"):
        g = fixture(name)
        same_iii.append(assemble(g).template.signature()
                        == reduced_gysin_template(g.orbit_pair, g.degree_bound, g.total_dims).signature())
    ok = same_ii and all(same_iii)
    report(7, ok, f"semi-free template identical: {same_ii}; no-conjugate templates identical: {same_iii}")


def test_8_honest_underdetermination(report):
    r = assemble(fixture("hopf_like_free"))
    profiles = {tuple(p.as_list(8)) for p in r.total_profiles()}
    expected = {(1, 0, 0, 0, 0, 0, 0, 1), (1, 0, 0, 1, 1, 0, 0, 1)}
    ok = r.solve.consistent and profiles == expected and len(r.total_profiles()) == 2
    report(8, ok, f"hopf_like_free feasible profiles {sorted(profiles)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
