"""Graded dimensions, i.e. Poincare polynomials with nonnegative coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class GradedDims:
    """Finitely supported map ``degree -> dimension``.

    Degrees with dimension zero are not stored, so two instances compare
    equal exactly when they describe the same polynomial.
    """

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean = {}
        for k, v in (dims or {}).items():
            if v == 0:
                continue
            if k < 0 or v < 0:
                raise ValueError(f"invalid graded entry {k}: {v}")
            if v:
                clean[int(k)] = int(v)
        self._dims = dict(sorted(clean.items()))

    @classmethod
    def from_list(cls, values: Iterable[int]) -> GradedDims:
        return cls(dict(enumerate(values)))

    def __getitem__(self, degree: int) -> int:
        return self._dims.get(degree, 0)

    def items(self):
        return self._dims.items()

    @property
    def top(self) -> int:
        """Highest degree with nonzero dimension, -1 when zero."""
        return max(self._dims, default=-1)

    def as_list(self, length: int | None = None) -> list[int]:
        n = self.top + 1 if length is None else length
        return [self[k] for k in range(n)]

    def is_zero(self) -> bool:
        return not self._dims

    def total(self) -> int:
        return sum(self._dims.values())

    def evaluate(self, t):
        return sum(v * t ** k for k, v in self._dims.items())

    def euler_characteristic(self) -> int:
        return self.evaluate(-1)

    def __add__(self, other: GradedDims) -> GradedDims:
        out = dict(self._dims)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return GradedDims(out)

    def __mul__(self, other: GradedDims) -> GradedDims:
        out: dict[int, int] = {}
        for a, x in self.items():
            for b, y in other.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return GradedDims(out)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self._dims == other._dims
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __repr__(self):
        return f"GradedDims({self._dims!r})"

    def poincare(self, var: str = "t") -> str:
        """Render as ``1 + 2t^2 + t^4``."""
        if not self._dims:
            return "0"
        terms = []
        for k, v in self._dims.items():
            if k == 0:
                terms.append(str(v))
                continue
            coeff = "" if v == 1 else str(v)
            power = var if k == 1 else f"{var}^{k}"
            terms.append(coeff + power)
        return " + ".join(terms)

    __str__ = poincare


def kunneth_poly(p: GradedDims, q: GradedDims) -> GradedDims:
    """Graded dimensions of a product space over a field."""
    return p * q
