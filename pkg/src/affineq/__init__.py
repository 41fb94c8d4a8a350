"""Depth-graded Poincare series of affine Kac-Moody algebras and their
eta-quotient forms, in exact integer arithmetic."""

from .algebra import (
    AlgebraId,
    AffineCartanData,
    ConstructionError,
    DataError,
    EtaQuotientSpec,
    HorizontalData,
    affine_cartan,
    eta_table_entry,
    horizontal,
    parse_algebra,
    supported_algebras,
    weyl_order_of_finite_type,
)
from .orbits import (
    BudgetExceededError,
    DepthCensus,
    PermutationWeightRecord,
    census_to_series,
    count_via_permutation_weights,
    enumerate_bfs,
)
from .series import (
    QSeries,
    bott_affine_poincare,
    eta_quotient_series,
    euler_series,
    finite_poincare,
    simply_laced_product,
)
from .verify import VerificationReport, verify_algebra, verify_all
from .weights import (
    AffineWeight,
    StraightenResult,
    depth_from_norm,
    finite_orbit_size,
    level,
    reflect,
    straighten,
    weyl_vector,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
