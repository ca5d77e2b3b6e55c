"""Finite cyclic lattice: position/momentum bases, DFT-like kernel, translations.

Sites are labelled x = 0..N-1 around a ring with spacing ``a``.  Position
eigenvalues a(x - j) and momentum eigenvalues g(p - j), with j = (N - 1)/2
and a g N = 2 pi, are symmetric about zero.  A parity phase (0 for odd N,
1/2 for even N) enters the basis kernel and the translation operators; it
is kept explicit rather than absorbed into the bases so that every site
stays equivalent under translation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidLatticeError, InvalidParameterError, NormalizationError

POSITION = "position"
MOMENTUM = "momentum"

NORM_TOL = 1e-12


@dataclass(frozen=True)
class LatticeConfig:
    """Constants of an N-site cyclic lattice.

    Built by :func:`make_config`; the derived fields satisfy
    spacing * momentum_step * n_sites = 2 pi and time_scale = 2 m a / g.
    """

    n_sites: int
    spacing: float         # lattice constant, length units
    mass: float
    momentum_step: float   # spacing between momentum eigenvalues
    center_offset: float   # (N - 1) / 2; integer iff N odd
    parity_phase: float    # 0 for odd N, 1/2 for even N
    time_scale: float      # converts dimensionless time to physical time
    root_of_unity: complex

    @property
    def site_positions(self) -> np.ndarray:
        return self.spacing * (np.arange(self.n_sites) - self.center_offset)

    @property
    def momentum_values(self) -> np.ndarray:
        return self.momentum_step * (np.arange(self.n_sites) - self.center_offset)

    @property
    def momentum_indices(self) -> np.ndarray:
        """Shifted momentum labels p - j; half-odd-integers when N is even."""
        return np.arange(self.n_sites) - self.center_offset

    def root_phase(self, exponent):
        """Fractional power of the principal root of unity, exp(i 2 pi z / N)."""
        return np.exp(2j * np.pi * np.asarray(exponent) / self.n_sites)

    def physical_time(self, dimensionless_time):
        """Convert dimensionless time to physical time t = T * time_scale."""
        return dimensionless_time * self.time_scale


def make_config(n_sites: int, spacing: float = 1.0, mass: float = 1.0) -> LatticeConfig:
    """Build the lattice constants for ``n_sites`` sites.

    Raises InvalidLatticeError for fewer than two sites and
    InvalidParameterError for nonpositive spacing or mass.
    """
    if int(n_sites) != n_sites or n_sites < 2:
        raise InvalidLatticeError(f"need at least 2 sites, got {n_sites}")
    if spacing <= 0:
        raise InvalidParameterError(f"spacing must be positive, got {spacing}")
    if mass <= 0:
        raise InvalidParameterError(f"mass must be positive, got {mass}")
    n = int(n_sites)
    momentum_step = 2.0 * math.pi / (n * spacing)
    return LatticeConfig(
        n_sites=n,
        spacing=float(spacing),
        mass=float(mass),
        momentum_step=momentum_step,
        center_offset=(n - 1) / 2.0,
        parity_phase=0.0 if n % 2 else 0.5,
        time_scale=2.0 * mass * spacing / momentum_step,
        root_of_unity=cmath.exp(2j * math.pi / n),
    )


@dataclass(frozen=True)
class QuantumState:
    """Normalized complex amplitudes over the N sites, in one basis."""

    config: LatticeConfig
    amplitudes: np.ndarray
    basis: str = POSITION

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.config.n_sites,):
            raise InvalidParameterError(
                f"amplitude vector must have length {self.config.n_sites}, got shape {amps.shape}"
            )
        if self.basis not in (POSITION, MOMENTUM):
            raise InvalidParameterError(f"unknown basis {self.basis!r}")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise NormalizationError(f"state norm^2 = {norm_sq!r}, expected 1")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def basis_state(config: LatticeConfig, index: int, basis: str = POSITION) -> QuantumState:
    """The state fully concentrated on one basis label."""
    if not 0 <= index < config.n_sites:
        raise IndexError(f"basis index {index} out of range for {config.n_sites} sites")
    amps = np.zeros(config.n_sites, dtype=np.complex128)
    amps[index] = 1.0
    return QuantumState(config, amps, basis)


@dataclass(frozen=True)
class BasisKernel:
    """Unitary overlap matrix between the position and momentum bases.

    matrix[x, p] is the overlap of position vector x with momentum vector p;
    every entry has modulus 1/sqrt(N) (the bases are mutually unbiased).
    """

    config: LatticeConfig
    matrix: np.ndarray


@lru_cache(maxsize=64)
def _kernel_matrix(n: int) -> np.ndarray:
    # entries depend only on the site count
    j = (n - 1) / 2.0
    alpha = 0.0 if n % 2 else 0.5
    x = np.arange(n)[:, None]
    p = np.arange(n)[None, :]
    exponent = (p - j) * (x - j) + alpha * (x - p)
    mat = np.exp(2j * np.pi * exponent / n) / math.sqrt(n)
    mat.setflags(write=False)
    return mat


def basis_kernel(config: LatticeConfig) -> BasisKernel:
    return BasisKernel(config, _kernel_matrix(config.n_sites))


def position_to_momentum(state: QuantumState) -> QuantumState:
    """Re-express a position-basis state in the momentum basis."""
    if state.basis != POSITION:
        raise InvalidParameterError("expected a position-basis state")
    kernel = _kernel_matrix(state.config.n_sites)
    return QuantumState(state.config, kernel.conj().T @ state.amplitudes, MOMENTUM)


def momentum_to_position(state: QuantumState) -> QuantumState:
    """Inverse of :func:`position_to_momentum`."""
    if state.basis != MOMENTUM:
        raise InvalidParameterError("expected a momentum-basis state")
    kernel = _kernel_matrix(state.config.n_sites)
    return QuantumState(state.config, kernel @ state.amplitudes, POSITION)


def translate_position(state: QuantumState) -> QuantumState:
    """Shift every site label by one, x -> x+1 mod N, times the parity phase.

    Applying this N times returns the state for odd N and minus the state
    for even N.
    """
    if state.basis != POSITION:
        raise InvalidParameterError("expected a position-basis state")
    cfg = state.config
    shifted = np.roll(state.amplitudes, 1) * cfg.root_phase(cfg.parity_phase)
    return QuantumState(cfg, shifted, POSITION)


def translate_momentum(state: QuantumState) -> QuantumState:
    """Momentum-basis counterpart of :func:`translate_position` (p -> p+1 mod N)."""
    if state.basis != MOMENTUM:
        raise InvalidParameterError("expected a momentum-basis state")
    cfg = state.config
    shifted = np.roll(state.amplitudes, 1) * cfg.root_phase(cfg.parity_phase)
    return QuantumState(cfg, shifted, MOMENTUM)


def momentum_expectation(state: QuantumState) -> float:
    """Mean momentum of a state given in either basis."""
    if state.basis == POSITION:
        state = position_to_momentum(state)
    weights = np.abs(state.amplitudes) ** 2
    return float(np.dot(state.config.momentum_values, weights))
