"""Lefschetz behaviour of monomial almost complete intersections in three
variables, through determinants, lozenge tilings of punctured hexagons, and
generic splitting types.
"""

from .errors import BudgetExceededError, InternalCheckError, ParameterError
from .formulas import (
    ClosedDetResult,
    Polynomial,
    closed_det,
    det_poly_interpolate,
    f_value,
    hyper_even,
    hyper_odd,
    hyperfactorial,
    lagrange_interpolate,
    mac,
    split_binom_det,
    symmetry_conjecture,
)
from .hilbert import HilbertData, h_vector, monomial_basis, twin_peaks
from .linalg import (
    FactoredInt,
    WlpReport,
    det_exact,
    factor_integer,
    forced_failure_primes,
    matrix_rank_exact,
    matrix_rank_mod,
    permanent_exact,
    wlp_report,
)
from .matrices import IntMatrix, build_N, build_Z, path_count_matrix
from .params import (
    AciParams,
    DerivedStats,
    PunctureClass,
    SocleInfo,
    ci_embed,
    classify_puncture,
    derive_stats,
    hex_stats,
    hexagon_to_params,
    socle_info,
)
from .render import render_region, render_tiling
from .splitting import (
    EquivalenceReport,
    JumpingLines,
    SplittingType,
    equivalence_report,
    generic_splitting_type,
    jumping_lines,
    restricted_ideal_regularity,
    two_variable_regularity,
    wlp_holds,
)
from .tilings import (
    Matching,
    PathFamily,
    Region,
    SignedEnumeration,
    Tiling,
    build_region,
    enumerate_tilings,
    rotate_triplet,
    signed_enumeration,
)

__version__ = "0.1.0"

__all__ = [
    "AciParams",
    "BudgetExceededError",
    "ClosedDetResult",
    "DerivedStats",
    "EquivalenceReport",
    "FactoredInt",
    "HilbertData",
    "IntMatrix",
    "InternalCheckError",
    "JumpingLines",
    "Matching",
    "ParameterError",
    "PathFamily",
    "Polynomial",
    "PunctureClass",
    "Region",
    "SignedEnumeration",
    "SocleInfo",
    "SplittingType",
    "Tiling",
    "WlpReport",
    "build_N",
    "build_Z",
    "build_region",
    "ci_embed",
    "classify_puncture",
    "closed_det",
    "derive_stats",
    "det_exact",
    "det_poly_interpolate",
    "enumerate_tilings",
    "equivalence_report",
    "f_value",
    "factor_integer",
    "forced_failure_primes",
    "generic_splitting_type",
    "h_vector",
    "hex_stats",
    "hexagon_to_params",
    "hyper_even",
    "hyper_odd",
    "hyperfactorial",
    "jumping_lines",
    "lagrange_interpolate",
    "mac",
    "matrix_rank_exact",
    "matrix_rank_mod",
    "monomial_basis",
    "path_count_matrix",
    "permanent_exact",
    "render_region",
    "render_tiling",
    "restricted_ideal_regularity",
    "rotate_triplet",
    "signed_enumeration",
    "socle_info",
    "split_binom_det",
    "symmetry_conjecture",
    "twin_peaks",
    "two_variable_regularity",
    "wlp_holds",
    "wlp_report",
]
