"""Numerical radius, Crawford number and Euclidean operator radius of complex matrices.

The package computes the radii by support-function sweeps, evaluates a
catalog of inequalities relating them to norms and to each other, and
verifies the catalog over seeded random matrix ensembles.
"""

from .bounds import ALL_IDS, PAIR_IDS, PARAMETERIZED, SINGLE_IDS, BoundEvaluation, evaluate_all, evaluate_at
from .config import DEFAULT_CONFIG, ToleranceConfig
from .ensembles import KINDS, EnsembleSpec, generate_matrix, generate_pair
from .errors import (
    AlphaOutOfRange,
    DimensionMismatch,
    MatrixFormatError,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
    RadiusLabError,
    RTooSmall,
    SOutOfRange,
    UnknownBoundId,
)
from .harness import (
    VerificationReport,
    ViolationRecord,
    emit_report,
    identity_suite,
    lemma_property_suite,
    run_verification,
)
from .linalg import hermitian_eigen, im_part, jacobi_eigh, matrix_abs, operator_norm, psd_power, re_part
from .matrix_io import read_matrix, write_matrix
from .radii import (
    RadiusResult,
    crawford_number,
    euclidean_radius,
    numerical_radius,
    numerical_range_boundary,
    real_product_inf,
    sphere_oracle_radius,
)

__all__ = [
    "ALL_IDS",
    "DEFAULT_CONFIG",
    "KINDS",
    "PAIR_IDS",
    "PARAMETERIZED",
    "SINGLE_IDS",
    "AlphaOutOfRange",
    "BoundEvaluation",
    "DimensionMismatch",
    "EnsembleSpec",
    "MatrixFormatError",
    "NegativeEigenvalue",
    "NoConvergence",
    "NotHermitian",
    "RTooSmall",
    "RadiusLabError",
    "RadiusResult",
    "SOutOfRange",
    "ToleranceConfig",
    "UnknownBoundId",
    "VerificationReport",
    "ViolationRecord",
    "crawford_number",
    "emit_report",
    "euclidean_radius",
    "evaluate_all",
    "evaluate_at",
    "generate_matrix",
    "generate_pair",
    "hermitian_eigen",
    "identity_suite",
    "im_part",
    "jacobi_eigh",
    "lemma_property_suite",
    "matrix_abs",
    "numerical_radius",
    "numerical_range_boundary",
    "operator_norm",
    "psd_power",
    "re_part",
    "read_matrix",
    "real_product_inf",
    "run_verification",
    "sphere_oracle_radius",
    "write_matrix",
]
