"""Finite simplicial complexes and their rational cohomology.

Simplices are sorted vertex tuples; the coboundary of a ``k``-cochain ``c``
is ``(dc)(v0..vk+1) = sum_i (-1)^i c(v0..^vi..vk+1)``.  Cochain vectors are
indexed by the simplices of one dimension in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .exactla import RationalMatrix, Vector, column_space_basis, kernel_basis, solve
from .graded import GradedDims, kunneth_poly
from .lesolve import ExactSequenceTemplate, Slot

Simplex = tuple

__all__ = [
    "SimplicialComplex",
    "SimplicialPair",
    "CohomologyResult",
    "MalformedComplexError",
    "MalformedPairError",
    "NonSimplicialMapError",
    "cohomology",
    "relative_cohomology",
    "pair_long_exact_sequence",
    "induced_map",
    "cochain_pullback",
    "kunneth_poly",
    "disjoint_union",
]


class MalformedComplexError(ValueError):
    pass


class MalformedPairError(ValueError):
    pass


class NonSimplicialMapError(ValueError):
    pass


def _facets(s: Simplex) -> Iterator[tuple[int, Simplex]]:
    for i in range(len(s)):
        yield i, s[:i] + s[i + 1:]


def _as_simplex(raw: Iterable[int]) -> Simplex:
    verts = [int(v) for v in raw]
    s = tuple(sorted(verts))
    if len(set(s)) != len(s):
        raise MalformedComplexError(f"repeated vertex in simplex {tuple(verts)}")
    if s and s[0] < 0:
        raise MalformedComplexError(f"negative vertex label in {tuple(verts)}")
    return s


class SimplicialComplex:
    """Immutable finite abstract simplicial complex.

    The constructor demands the full face-closed simplex list; use
    :meth:`closure` to generate all faces from a list of maximal simplices.
    """

    __slots__ = ("_simplices", "_by_dim", "_index", "_delta")

    def __init__(self, simplices: Iterable[Iterable[int]] = ()):
        simps = {s for s in map(_as_simplex, simplices) if s}
        for s in simps:
            if len(s) < 2:
                continue
            for _, face in _facets(s):
                if face not in simps:
                    raise MalformedComplexError(f"face {face} of simplex {s} is missing")
        by_dim: dict[int, list] = {}
        for s in simps:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._simplices = frozenset(simps)
        self._by_dim = {k: tuple(sorted(v)) for k, v in sorted(by_dim.items())}
        self._index = {k: {s: i for i, s in enumerate(v)} for k, v in self._by_dim.items()}
        self._delta: dict[int, RationalMatrix] = {}

    @classmethod
    def closure(cls, simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
        out = set()
        for raw in simplices:
            s = _as_simplex(raw)
            for r in range(1, len(s) + 1):
                out.update(combinations(s, r))
        return cls(out)

    @property
    def simplices(self) -> frozenset:
        return self._simplices

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self._by_dim.get(0, ()))

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices_of_dim(self, k: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    def index_of(self, k: int) -> dict[Simplex, int]:
        return self._index.get(k, {})

    def count(self, k: int) -> int:
        return len(self._by_dim.get(k, ()))

    def f_vector(self) -> list[int]:
        return [self.count(k) for k in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._simplices

    def __iter__(self) -> Iterator[Simplex]:
        for k in self._by_dim:
            yield from self._by_dim[k]

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other):
        if isinstance(other, SimplicialComplex):
            return self._simplices == other._simplices
        return NotImplemented

    def __hash__(self):
        return hash(self._simplices)

    def __repr__(self):
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    def maximal_simplices(self) -> list[Simplex]:
        top = [s for s in self if not any(
            len(t) == len(s) + 1 and set(s) <= set(t) for t in self._by_dim.get(len(s), ()))]
        return sorted(top, key=lambda s: (len(s), s))

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self._simplices <= other._simplices

    def relabel(self, mapping: Mapping[int, int] | Callable[[int], int]) -> SimplicialComplex:
        f = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        return SimplicialComplex(tuple(f(v) for v in s) for s in self._simplices)

    def without_open_star(self, v: int) -> SimplicialComplex:
        return SimplicialComplex(s for s in self._simplices if v not in s)

    def coboundary(self, k: int) -> RationalMatrix:
        """Matrix of ``C^k -> C^{k+1}``; rows are (k+1)-simplices."""
        if k in self._delta:
            return self._delta[k]
        rows = self._by_dim.get(k + 1, ())
        cols = self.index_of(k)
        n = len(cols)
        entries = [0] * (len(rows) * n)
        for r, tau in enumerate(rows):
            for i, face in _facets(tau):
                entries[r * n + cols[face]] = -1 if i % 2 else 1
        m = RationalMatrix(len(rows), n, entries)
        self._delta[k] = m
        return m


@dataclass(frozen=True)
class SimplicialPair:
    total: SimplicialComplex
    sub: SimplicialComplex = field(default_factory=SimplicialComplex)

    def __post_init__(self):
        if not self.sub.is_subcomplex_of(self.total):
            extra = sorted(self.sub.simplices - self.total.simplices, key=lambda s: (len(s), s))
            raise MalformedPairError(f"simplex {extra[0]} of the subcomplex is not in the total complex")

    def relative_cells(self, k: int) -> tuple[Simplex, ...]:
        sub = self.sub.simplices
        return tuple(s for s in self.total.simplices_of_dim(k) if s not in sub)


@dataclass(frozen=True, eq=False)
class CohomologyResult:
    """Cohomology of a cochain complex with chosen representatives.

    ``cells[k]`` fixes the coordinate order of ``k``-cochains.  For every
    degree, ``representatives[k]`` are cocycles whose classes form a basis
    of ``H^k``; ``cocycles[k]`` and ``coboundaries[k]`` are bases of
    ``Z^k`` and ``B^k``.
    """

    dims: GradedDims
    cells: dict
    representatives: dict
    cocycles: dict
    coboundaries: dict

    def degrees(self) -> range:
        return range(max(self.cells, default=-1) + 1)

    def coordinates(self, k: int, vectors: list[Vector]) -> RationalMatrix:
        """Express cocycles in the representative basis of ``H^k``.

        Returns a ``dims[k] x len(vectors)`` matrix.  Raises ``ValueError``
        if some vector is not a cocycle.
        """
        n = len(self.cells.get(k, ()))
        reps = list(self.representatives.get(k, ()))
        if not vectors:
            return RationalMatrix.zeros(len(reps), 0)
        basis = reps + list(self.coboundaries.get(k, ()))
        if not basis:
            if any(any(v) for v in vectors):
                raise ValueError(f"vector is not a cocycle in degree {k}")
            return RationalMatrix.zeros(0, len(vectors))
        x = solve(RationalMatrix.from_columns(basis, n), RationalMatrix.from_columns(vectors, n))
        if x is None:
            raise ValueError(f"vector is not a cocycle in degree {k}")
        return RationalMatrix.from_rows(x.row_list()[:len(reps)], len(vectors))


def _cohomology_of(cells: dict[int, tuple], delta: Callable[[int], RationalMatrix]) -> CohomologyResult:
    dims, reps, zs, bs = {}, {}, {}, {}
    top = max((k for k, c in cells.items() if c), default=-1)
    prev_image: list[Vector] = []
    for k in range(top + 1):
        n = len(cells.get(k, ()))
        z = kernel_basis(delta(k)) if n else []
        chosen = column_space_basis(prev_image + z, n)
        reps[k] = tuple(chosen[len(prev_image):])
        zs[k] = tuple(z)
        bs[k] = tuple(prev_image)
        dims[k] = len(reps[k])
        d = delta(k)
        prev_image = column_space_basis(d.column_list(), d.rows) if d.rows and d.cols else []
    cells = {k: tuple(cells.get(k, ())) for k in range(top + 1)}
    return CohomologyResult(GradedDims(dims), cells, reps, zs, bs)


def cohomology(x: SimplicialComplex) -> CohomologyResult:
    cells = {k: x.simplices_of_dim(k) for k in range(x.dimension + 1)}
    return _cohomology_of(cells, x.coboundary)


def _submatrix(m: RationalMatrix, rows: list[int], cols: list[int]) -> RationalMatrix:
    return RationalMatrix(len(rows), len(cols), (m[i, j] for i in rows for j in cols))


def relative_cohomology(p: SimplicialPair) -> CohomologyResult:
    """Cohomology of the cochains of ``p.total`` that vanish on ``p.sub``."""
    x = p.total
    cells = {k: p.relative_cells(k) for k in range(x.dimension + 1)}
    positions = {k: [x.index_of(k)[s] for s in c] for k, c in cells.items()}

    def delta(k):
        return _submatrix(x.coboundary(k), positions.get(k + 1, []), positions.get(k, []))

    return _cohomology_of(cells, delta)


def _sort_sign(image: tuple) -> tuple[Simplex, int]:
    s = list(image)
    sign = 1
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
    return tuple(s), sign


def cochain_pullback(f: Mapping[int, int], x: SimplicialComplex, y: SimplicialComplex, k: int) -> RationalMatrix:
    """Matrix of ``f^#: C^k(y) -> C^k(x)`` for a simplicial vertex map ``f``."""
    xs = x.simplices_of_dim(k)
    yidx = y.index_of(k)
    n = len(yidx)
    entries = [0] * (len(xs) * n)
    for r, s in enumerate(xs):
        try:
            image = tuple(f[v] for v in s)
        except KeyError as exc:
            raise NonSimplicialMapError(f"vertex {exc.args[0]} has no image") from None
        if tuple(sorted(set(image))) not in y:
            raise NonSimplicialMapError(f"simplex {s} maps to {image}, which is not a simplex")
        if len(set(image)) < len(image):
            continue
        t, sign = _sort_sign(image)
        entries[r * n + yidx[t]] = sign
    return RationalMatrix(len(xs), n, entries)


def induced_map(
    f: Mapping[int, int],
    x: SimplicialComplex,
    y: SimplicialComplex,
    hx: CohomologyResult | None = None,
    hy: CohomologyResult | None = None,
) -> dict[int, RationalMatrix]:
    """Pullback ``H^k(y) -> H^k(x)`` in the representative bases, per degree.

    Each matrix has shape ``(dim H^k(x), dim H^k(y))``.
    """
    hx = hx or cohomology(x)
    hy = hy or cohomology(y)
    out = {}
    for k in range(max(x.dimension, y.dimension, 0) + 1):
        pull = cochain_pullback(f, x, y, k)
        reps = list(hy.representatives.get(k, ()))
        if reps:
            out[k] = hx.coordinates(k, [pull @ r for r in reps])
        else:
            out[k] = RationalMatrix.zeros(hx.dims[k], 0)
    return out


def pair_long_exact_sequence(p: SimplicialPair) -> ExactSequenceTemplate:
    """``0 -> H^0(X,A) -> H^0(X) -> H^0(A) -> H^1(X,A) -> ... -> H^d(A) -> 0``.

    Maps are explicit: extension by zero, restriction, and the connecting
    map obtained by extending a cocycle of ``A`` by zero and taking its
    coboundary in ``X``.
    """
    x, a = p.total, p.sub
    hrel = relative_cohomology(p)
    hx = cohomology(x)
    ha = cohomology(a)
    top = max(x.dimension, 0)

    slots = [Slot("0", 0)]
    maps: list[RationalMatrix] = []
    prev_dim = 0
    for k in range(top + 1):
        xk = x.simplices_of_dim(k)
        xidx = x.index_of(k)
        rel_k = p.relative_cells(k)
        ak = a.simplices_of_dim(k)
        d_rel, d_x, d_a = hrel.dims[k], hx.dims[k], ha.dims[k]

        if k == 0:
            maps.append(RationalMatrix.zeros(d_rel, prev_dim))
        else:
            # connecting map H^{k-1}(A) -> H^k(X,A)
            a_prev = a.simplices_of_dim(k - 1)
            xprev_idx = x.index_of(k - 1)
            delta = x.coboundary(k - 1)
            images = []
            for z in ha.representatives.get(k - 1, ()):
                c = [0] * x.count(k - 1)
                for s, val in zip(a_prev, z):
                    c[xprev_idx[s]] = val
                dc = delta @ c
                images.append(tuple(dc[xidx[s]] for s in rel_k))
            maps.append(hrel.coordinates(k, images) if images else RationalMatrix.zeros(d_rel, 0))

        ext = []
        for r in hrel.representatives.get(k, ()):
            c = [0] * len(xk)
            for s, val in zip(rel_k, r):
                c[xidx[s]] = val
            ext.append(tuple(c))
        maps.append(hx.coordinates(k, ext) if ext else RationalMatrix.zeros(d_x, 0))

        res = [tuple(z[xidx[s]] for s in ak) for z in hx.representatives.get(k, ())]
        maps.append(ha.coordinates(k, res) if res else RationalMatrix.zeros(d_a, 0))

        slots += [
            Slot(f"H^{k}(X,A)", d_rel, degree=k, kind="relative"),
            Slot(f"H^{k}(X)", d_x, degree=k, kind="total"),
            Slot(f"H^{k}(A)", d_a, degree=k, kind="sub"),
        ]
        prev_dim = d_a
    maps.append(RationalMatrix.zeros(0, prev_dim))
    slots.append(Slot("0", 0))
    return ExactSequenceTemplate(tuple(slots), tuple(maps))


def disjoint_union(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    shift = max(x.vertices, default=-1) + 1
    return SimplicialComplex(list(x) + [tuple(v + shift for v in s) for s in y])
