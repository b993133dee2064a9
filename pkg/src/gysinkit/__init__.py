"""Gysin sequences of S^3-actions as exact linear algebra over the rationals."""

from ._backend import BACKEND
from .complexes import (
    CohomologyResult,
    SimplicialComplex,
    SimplicialPair,
    cohomology,
    disjoint_union,
    induced_map,
    pair_long_exact_sequence,
    relative_cohomology,
)
from .equivariant import (
    Involution,
    SplitCohomology,
    antisym_of_fixed_set,
    quotient_complex,
    split_involution,
)
from .exactla import RationalMatrix, eigenspace_dims, kernel_basis, rank
from .fixtures import FIXTURES, fixture
from .graded import GradedDims, kunneth_poly
from .gysin import GysinInput, GysinReport, assemble, duality_report, e2_rows, reduced_gysin_template
from .lesolve import (
    UNKNOWN,
    ExactSequenceTemplate,
    Slot,
    SolveReport,
    alternating_sum_check,
    check_exact,
    solve_dims,
)

__version__ = "0.1.0"
