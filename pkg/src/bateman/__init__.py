"""Two quantization routes for the damped harmonic oscillator and its
time-reversed partner, treated as one closed two-mode system.

The package provides an exact symbolic ladder algebra (the oracle), truncated
Fock-space matrices, the two canonical transforms that diagonalize the
Hamiltonian, divergence diagnostics for the rotated basis, and scalar
dynamics, plus verification suites and a CLI that reports every identity with
explicit deviations and tolerances.
"""

__version__ = "0.1.0"

from .errors import (
    BatemanError,
    DimensionMismatch,
    DomainError,
    FitError,
    HeadroomError,
    MixedUnitError,
    NullspaceError,
    NumericalError,
    OverdampedError,
    RadicalMismatch,
    SeriesDivergence,
)
from .params import PhysicalParams, derive_params
from .fock import (
    FockSpace,
    HamiltonianSet,
    LadderSet,
    build_hamiltonian,
    build_ladder,
    commutator,
    interior_deviation,
    interior_projector,
    position_operators,
)
from .algebra import (
    CQ,
    ExactScalar,
    LadderPoly,
    basis_matrix_element,
    normal_order,
    vacuum_pairing,
)
from .ft import (
    FtEigen,
    FtTransform,
    ft_eigenvalue,
    ft_gram,
    ft_norm_exponent_fit,
    ft_standard_norm,
    ft_transform,
    ft_vacuum_series,
)
from .imagscale import (
    IsEigen,
    IsTransform,
    is_eigenvalue,
    is_gram,
    is_transform,
    is_vacuum,
)
from .dynamics import (
    StabilityClass,
    StateEvolution,
    classify,
    eigen_record,
    schrodinger_factor,
)
from .verify import CheckResult, VerifyConfig, all_passed, run_suite

__all__ = [
    "__version__",
    "BatemanError",
    "DimensionMismatch",
    "DomainError",
    "FitError",
    "HeadroomError",
    "MixedUnitError",
    "NullspaceError",
    "NumericalError",
    "OverdampedError",
    "RadicalMismatch",
    "SeriesDivergence",
    "PhysicalParams",
    "derive_params",
    "FockSpace",
    "HamiltonianSet",
    "LadderSet",
    "build_hamiltonian",
    "build_ladder",
    "commutator",
    "interior_deviation",
    "interior_projector",
    "position_operators",
    "CQ",
    "ExactScalar",
    "LadderPoly",
    "basis_matrix_element",
    "normal_order",
    "vacuum_pairing",
    "FtEigen",
    "FtTransform",
    "ft_eigenvalue",
    "ft_gram",
    "ft_norm_exponent_fit",
    "ft_standard_norm",
    "ft_transform",
    "ft_vacuum_series",
    "IsEigen",
    "IsTransform",
    "is_eigenvalue",
    "is_gram",
    "is_transform",
    "is_vacuum",
    "StabilityClass",
    "StateEvolution",
    "classify",
    "eigen_record",
    "schrodinger_factor",
    "CheckResult",
    "VerifyConfig",
    "all_passed",
    "run_suite",
]
