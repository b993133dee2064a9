"""Random complexes, pairs and involutions shared by the tests, plus a
floating-point Betti-number oracle that shares no code with the package."""

import random
from itertools import combinations

import numpy as np

from gysinkit.complexes import SimplicialComplex, SimplicialPair
from gysinkit.equivariant import Involution


def random_complex(rng: random.Random, n_vertices=6, max_simplices=40, max_dim=3):
    simplices = set()
    for _ in range(rng.randint(1, 12)):
        k = rng.randint(1, min(max_dim + 1, n_vertices))
        s = tuple(sorted(rng.sample(range(n_vertices), k)))
        faces = {f for r in range(1, len(s) + 1) for f in combinations(s, r)}
        if len(simplices | faces) > max_simplices:
            continue
        simplices |= faces
    return SimplicialComplex(simplices)


def random_pair(rng: random.Random, **kw):
    x = random_complex(rng, **kw)
    chosen = [s for s in x if rng.random() < 0.3]
    return SimplicialPair(x, SimplicialComplex.closure(chosen))


def random_z2_complex(rng: random.Random, n_pairs=3, n_fixed=2, mixed=True):
    """Complex on ``2*n_pairs + n_fixed`` vertices closed under the swap
    ``v <-> v + n_pairs`` (fixed vertices come last).  With ``mixed=False``
    no simplex contains a vertex together with its partner."""
    n = 2 * n_pairs + n_fixed
    tau = {v: (v + n_pairs if v < n_pairs else v - n_pairs) if v < 2 * n_pairs else v for v in range(n)}
    simplices = set()
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(1, 3)
        s = rng.sample(range(n), k)
        if not mixed and len({min(v, tau[v]) for v in s}) < len(s):
            continue
        for t in (s, [tau[v] for v in s]):
            t = tuple(sorted(t))
            simplices |= {f for r in range(1, len(t) + 1) for f in combinations(t, r)}
    x = SimplicialComplex(simplices)
    verts = set(x.vertices)
    return Involution(x, {v: tau[v] for v in verts})


def coboundary_float(x: SimplicialComplex, k: int) -> np.ndarray:
    rows = sorted(s for s in x.simplices if len(s) == k + 2)
    cols = sorted(s for s in x.simplices if len(s) == k + 1)
    index = {s: i for i, s in enumerate(cols)}
    d = np.zeros((len(rows), len(cols)))
    for r, s in enumerate(rows):
        for i in range(len(s)):
            d[r, index[s[:i] + s[i + 1:]]] = (-1) ** i
    return d


def betti_float(x: SimplicialComplex) -> list[int]:
    top = x.dimension
    counts = [sum(1 for s in x.simplices if len(s) == k + 1) for k in range(top + 1)]

    def rk(k):
        if k < 0 or k >= top:
            return 0
        d = coboundary_float(x, k)
        return int(np.linalg.matrix_rank(d)) if d.size else 0

    return [counts[k] - rk(k) - rk(k - 1) for k in range(top + 1)]
