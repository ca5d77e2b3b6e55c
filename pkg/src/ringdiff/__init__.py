"""Quantum diffusion of a localized particle on a cyclic lattice.

Simulation and closed-form analysis of free evolution on an N-site ring:
position/momentum bases related by a DFT-like kernel, occupation dynamics
with their even/odd-N dichotomy, ring-aware centroid and width statistics,
diffusion and reconstruction times, the continuum-ring limit, and a
classical covering-time baseline.  A CLI emits CSV series and SVG figures.
"""

from .continuum import (
    HalfIntegerModeReport,
    RingWavefunction,
    evaluate_on_grid,
    evolve_ring,
    gaussian_packet,
    half_integer_mode_demo,
    position_grid,
    random_packet,
    reconstruction_check,
    ring_reconstruction_time,
    ring_wavefunction,
)
from .dirichlet import dirichlet_ratio
from .errors import (
    ConsistencyError,
    InvalidLatticeError,
    InvalidParameterError,
    NormalizationError,
)
from .evolution import (
    PeriodicityReport,
    SymmetryReport,
    amplitude_localized,
    amplitude_period,
    amplitudes_localized,
    check_periodicity,
    check_symmetry,
    evolve_state,
    occupation_probability,
    probability_period,
    quadratic_dispersion,
)
from .lattice import (
    MOMENTUM,
    POSITION,
    BasisKernel,
    LatticeConfig,
    QuantumState,
    basis_kernel,
    basis_state,
    make_config,
    momentum_expectation,
    momentum_to_position,
    position_to_momentum,
    translate_momentum,
    translate_position,
)
from .ringstats import (
    Centroid,
    CoverTimeEstimate,
    centroid_localized_closed,
    centroid_localized_direct,
    classical_cover_time_mc,
    diffusion_time,
    first_centroid_root,
    reconstruction_time,
    ring_centroid,
    rotated_centroid_two_site,
    rotated_centroid_two_site_direct,
    short_time_slope,
    two_site_state,
    width_localized_closed,
)

__version__ = "0.1.0"

__all__ = [
    "BasisKernel",
    "Centroid",
    "ConsistencyError",
    "CoverTimeEstimate",
    "HalfIntegerModeReport",
    "InvalidLatticeError",
    "InvalidParameterError",
    "LatticeConfig",
    "MOMENTUM",
    "NormalizationError",
    "POSITION",
    "PeriodicityReport",
    "QuantumState",
    "RingWavefunction",
    "SymmetryReport",
    "amplitude_localized",
    "amplitude_period",
    "amplitudes_localized",
    "basis_kernel",
    "basis_state",
    "centroid_localized_closed",
    "centroid_localized_direct",
    "check_periodicity",
    "check_symmetry",
    "classical_cover_time_mc",
    "diffusion_time",
    "dirichlet_ratio",
    "evaluate_on_grid",
    "evolve_ring",
    "evolve_state",
    "first_centroid_root",
    "gaussian_packet",
    "half_integer_mode_demo",
    "make_config",
    "momentum_expectation",
    "momentum_to_position",
    "occupation_probability",
    "position_grid",
    "position_to_momentum",
    "probability_period",
    "quadratic_dispersion",
    "random_packet",
    "reconstruction_check",
    "reconstruction_time",
    "ring_centroid",
    "ring_reconstruction_time",
    "ring_wavefunction",
    "rotated_centroid_two_site",
    "rotated_centroid_two_site_direct",
    "short_time_slope",
    "translate_momentum",
    "translate_position",
    "two_site_state",
    "width_localized_closed",
]
