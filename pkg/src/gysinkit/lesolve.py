"""Exact sequences: verify them from explicit maps, or solve for unknown
dimensions from the known ones.

For dimension-only solving every arrow ``i`` (from slot ``i`` to ``i+1``)
gets a rank variable ``r_i >= 0``.  Exactness plus rank-nullity give
``dim slot_i = r_{i-1} + r_i``, with no rank entering the first slot or
leaving the last.  The chain structure makes exhaustive enumeration cheap:
a backward pass computes which ranks can still reach the end, and the
forward search only walks through those.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .exactla import RationalMatrix, kernel_basis, rank

UNKNOWN = None

__all__ = [
    "UNKNOWN",
    "Slot",
    "ExactSequenceTemplate",
    "SolveReport",
    "MalformedTemplateError",
    "UnboundedTemplateError",
    "check_exact",
    "solve_dims",
    "alternating_sum_check",
]


class MalformedTemplateError(ValueError):
    pass


class UnboundedTemplateError(ValueError):
    """Two adjacent unknown slots leave a rank variable without a bound."""


@dataclass(frozen=True)
class Slot:
    label: str
    dim: int | None
    degree: int | None = None
    kind: str | None = None

    def __post_init__(self):
        if self.dim is not None and self.dim < 0:
            raise MalformedTemplateError(f"slot {self.label!r} has negative dimension {self.dim}")

    @property
    def known(self) -> bool:
        return self.dim is not None


@dataclass(frozen=True)
class ExactSequenceTemplate:
    """Bounded sequence of slots claimed to be exact.

    ``maps``, when given, has one entry per arrow; an entry may be ``None``
    when that map is not known.
    """

    slots: tuple
    maps: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        if len(self.slots) < 2:
            raise MalformedTemplateError("a template needs at least the two boundary slots")
        for end in (self.slots[0], self.slots[-1]):
            if end.dim != 0:
                raise MalformedTemplateError(f"boundary slot {end.label!r} must have dimension 0")
        if self.maps is not None:
            object.__setattr__(self, "maps", tuple(self.maps))
            if len(self.maps) != len(self.slots) - 1:
                raise MalformedTemplateError(
                    f"{len(self.slots)} slots need {len(self.slots) - 1} maps, got {len(self.maps)}")
            for i, m in enumerate(self.maps):
                if m is None:
                    continue
                src, dst = self.slots[i].dim, self.slots[i + 1].dim
                if src is None or dst is None:
                    raise MalformedTemplateError(f"map {i} touches a slot of unknown dimension")
                if m.shape != (dst, src):
                    raise MalformedTemplateError(
                        f"map {i} ({self.slots[i].label} -> {self.slots[i + 1].label}) has shape "
                        f"{m.shape}, expected {(dst, src)}")

    def __len__(self):
        return len(self.slots)

    @property
    def dims(self) -> tuple:
        return tuple(s.dim for s in self.slots)

    @property
    def fully_known(self) -> bool:
        return all(s.known for s in self.slots)

    @property
    def has_all_maps(self) -> bool:
        return self.maps is not None and all(m is not None for m in self.maps)

    def unknown_positions(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.slots) if not s.known)

    def signature(self) -> tuple:
        """Slot-by-slot identity ignoring labels: ``(kind, degree, dim)``."""
        return tuple((s.kind, s.degree, s.dim) for s in self.slots)

    def with_dim(self, i: int, dim: int | None) -> ExactSequenceTemplate:
        slots = list(self.slots)
        slots[i] = replace(slots[i], dim=dim)
        return ExactSequenceTemplate(tuple(slots))

    def dims_only(self) -> ExactSequenceTemplate:
        return ExactSequenceTemplate(self.slots)


def _composite_zero(after: RationalMatrix, before: RationalMatrix) -> bool:
    return (after @ before).is_zero()


def check_exact(t: ExactSequenceTemplate) -> list[bool]:
    """Per-slot verdict: does the image of the incoming map equal the kernel
    of the outgoing map?"""
    if not t.has_all_maps:
        raise MalformedTemplateError("check_exact needs every slot known and every map explicit")
    n = len(t.slots)
    verdicts = []
    for i in range(n):
        dim = t.slots[i].dim
        incoming = t.maps[i - 1] if i > 0 else RationalMatrix.zeros(dim, 0)
        outgoing = t.maps[i] if i < n - 1 else RationalMatrix.zeros(0, dim)
        if not _composite_zero(outgoing, incoming):
            verdicts.append(False)
            continue
        kern = kernel_basis(outgoing)
        r_in = rank(incoming)
        if kern:
            stacked = incoming.hstack(RationalMatrix.from_columns(kern, dim))
            verdicts.append(rank(stacked) == r_in)
        else:
            verdicts.append(r_in == 0)
    return verdicts


def alternating_sum_check(t: ExactSequenceTemplate) -> bool:
    if not t.fully_known:
        raise MalformedTemplateError("alternating sum needs every dimension known")
    return sum((-1) ** i * d for i, d in enumerate(t.dims)) == 0


@dataclass(frozen=True)
class SolveReport:
    """Outcome of :func:`solve_dims`.

    ``feasible`` maps each unknown slot position to its sorted feasible
    values; ``rank_ranges[i]`` is the sorted tuple of feasible ranks of
    arrow ``i``; ``profiles`` lists every feasible assignment of the unknown
    slots, in position order.
    """

    consistent: bool
    unknown: tuple
    feasible: dict = field(default_factory=dict)
    rank_ranges: tuple = ()
    profiles: tuple = ()

    def value(self, i: int) -> int | None:
        vals = self.feasible.get(i, ())
        return vals[0] if len(vals) == 1 else None

    @property
    def unique(self) -> bool:
        return self.consistent and len(self.profiles) == 1

    def completed_dims(self, template: ExactSequenceTemplate) -> list[tuple]:
        """Every feasible full dimension vector of ``template``."""
        out = []
        for prof in self.profiles:
            dims = list(template.dims)
            for pos, v in zip(self.unknown, prof):
                dims[pos] = v
            out.append(tuple(dims))
        return out


def _arrow_bounds(dims: Sequence[int | None]) -> list[int]:
    bounds = []
    for i in range(len(dims) - 1):
        known = [d for d in (dims[i], dims[i + 1]) if d is not None]
        if not known:
            raise UnboundedTemplateError(
                f"slots {i} and {i + 1} are both unknown; the rank between them is unbounded")
        bounds.append(min(known))
    return bounds


def _step(dim: int | None, r_in: int, bound: int) -> range:
    """Ranks ``r_out`` of the arrow leaving a slot, given the entering rank."""
    if dim is None:
        return range(bound + 1)
    r_out = dim - r_in
    return range(r_out, r_out + 1) if 0 <= r_out <= bound else range(0)


def solve_dims(t: ExactSequenceTemplate) -> SolveReport:
    dims = list(t.dims)
    n = len(dims)
    bounds = _arrow_bounds(dims) + [0]  # nothing leaves the last slot
    unknown = t.unknown_positions()

    # reach[i]: ranks of arrow i from which the tail of the sequence is satisfiable
    reach: list[set[int]] = [set() for _ in range(n)]
    reach[n - 1] = {0}
    for i in range(n - 2, -1, -1):
        nxt = reach[i + 1]
        reach[i] = {a for a in range(bounds[i] + 1)
                    if any(b in nxt for b in _step(dims[i + 1], a, bounds[i + 1]))}

    chains: list[tuple[int, ...]] = []
    stack = [(0, (), 0)]  # (slot, ranks so far, entering rank)
    while stack:
        i, ranks, r_in = stack.pop()
        if i == n:
            chains.append(ranks)
            continue
        for r_out in reversed(_step(dims[i], r_in, bounds[i])):
            if r_out in reach[i]:
                stack.append((i + 1, ranks + (r_out,), r_out))

    if not chains:
        return SolveReport(False, unknown, {i: () for i in unknown},
                           tuple(() for _ in range(n - 1)), ())
    profiles = set()
    for ranks in chains:
        profiles.add(tuple((ranks[i - 1] if i else 0) + ranks[i] for i in unknown))
    profiles = tuple(sorted(profiles))
    feasible = {pos: tuple(sorted({p[j] for p in profiles})) for j, pos in enumerate(unknown)}
    rank_ranges = tuple(tuple(sorted({c[i] for c in chains})) for i in range(n - 1))
    return SolveReport(True, unknown, feasible, rank_ranges, profiles)
