"""Ring-aware statistics of site distributions and their closed-form dynamics.

The mean of a periodic distribution is taken on the unit circle: each site
x maps to the phase point exp(i 2 pi x / N), and the weighted sum of those
points is the centroid Z.  Its argument locates the center of the
distribution on the ring, and its modulus sets the spread,
width = a N sqrt(1 - |Z|^2), which runs from 0 (one site occupied) to a N
(uniform).  A uniform distribution has Z = 0 and no center at all; that
case is reported as an explicit flag, never as angle zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirichlet import dirichlet_ratio
from .errors import ConsistencyError, InvalidLatticeError, InvalidParameterError, NormalizationError
from .evolution import amplitudes_localized, evolve_state
from .lattice import LatticeConfig, QuantumState

PARITIES = ("even", "odd")

# |Z| below this is treated as the centerless (uniform-like) case
_NO_CENTER_RHO = 1e-14

_PROBABILITY_SUM_TOL = 1e-10
_ROOT_SCAN_POINTS = 10_000
_WIDTH_ARG_TOL = 1e-9
_ROOT_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class Centroid:
    """Circular mean of a site distribution and the derived ring statistics.

    ``theta`` and ``center`` are None when the distribution has no center
    (centroid at the origin).
    """

    z: complex
    rho: float
    theta: float | None
    center: float | None
    width: float


def ring_centroid(probabilities, config: LatticeConfig) -> Centroid:
    """Centroid, center and width of a probability vector over the sites."""
    probs = np.asarray(probabilities, dtype=float)
    n = config.n_sites
    if probs.shape != (n,):
        raise InvalidParameterError(f"expected {n} probabilities, got shape {probs.shape}")
    if np.any(probs < -1e-12):
        raise NormalizationError("negative probability")
    total = float(probs.sum())
    if abs(total - 1.0) > _PROBABILITY_SUM_TOL:
        raise NormalizationError(f"probabilities sum to {total!r}, expected 1")

    z = complex(np.exp(2j * np.pi * np.arange(n) / n) @ probs)
    rho = abs(z)
    if rho < _NO_CENTER_RHO:
        theta = None
        center = None
    else:
        theta = math.atan2(z.imag, z.real) % (2.0 * math.pi)
        label = theta * n / (2.0 * math.pi)
        if n - label < 1e-9:          # roundoff at the seam: label N is label 0
            label = 0.0
            theta = 0.0
        center = config.spacing * (label - config.center_offset)
    width = config.spacing * n * math.sqrt(max(0.0, 1.0 - min(rho, 1.0) ** 2))
    return Centroid(z=z, rho=rho, theta=theta, center=center, width=width)


def centroid_localized_closed(config: LatticeConfig, times):
    """Centroid of the site-0 walker as an explicit function of time.

    Real for all times; accepts a scalar or array of dimensionless times.
    """
    n = config.n_sites
    ratio = dirichlet_ratio(n - 1, 2.0 * np.asarray(times, dtype=float), n)
    return (ratio + 1.0) / n


def centroid_localized_direct(config: LatticeConfig, times):
    """Centroid of the site-0 walker via evolved amplitudes (brute-force route).

    Returns complex values; the imaginary part vanishes up to roundoff and
    serves as a cross-check on the closed form.
    """
    n = config.n_sites
    amps = amplitudes_localized(config, times)
    probs = np.abs(amps) ** 2
    phases = np.exp(2j * np.pi * np.arange(n) / n)
    z = probs @ phases
    return complex(z) if np.ndim(times) == 0 else z


def width_localized_closed(config: LatticeConfig, times):
    """Ring width of the site-0 walker; zero at T = 0, maximal a N at T_D."""
    n = config.n_sites
    scaled = n * np.asarray(centroid_localized_closed(config, times), dtype=float)
    arg = n * n - scaled * scaled
    if np.any(arg < -_WIDTH_ARG_TOL):
        worst = float(np.min(arg))
        raise ConsistencyError(f"width argument {worst} below zero beyond tolerance")
    width = config.spacing * np.sqrt(np.maximum(arg, 0.0))
    return float(width) if np.ndim(times) == 0 else width


# the centroid slope is bounded by pi, so any zero forces a grid value
# (spacing 1e-4) below this band
_ROOT_BAND = 1e-3


def _centroid_slope(config: LatticeConfig, time: float) -> float:
    """Derivative of the closed-form centroid, via the regular cosine-sum form."""
    n = config.n_sites
    coeff = 2.0 * np.arange(n - 1) - (n - 2)
    u = 2.0 * np.pi * float(time) / n
    return -(2.0 * np.pi / (n * n)) * float(np.sum(coeff * np.sin(coeff * u)))


def _bisect(func, lo: float, hi: float, f_lo: float) -> float:
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_lo * f_mid <= 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo < 1e-14:
            break
    return 0.5 * (lo + hi)


def first_centroid_root(config: LatticeConfig) -> float | None:
    """First zero of the closed-form centroid on (0, 1], found numerically.

    Scans a uniform grid and inspects each dip of the centroid in order.
    A dip that goes clearly negative is a transversal crossing and is
    bisected on the value; a dip that only touches zero (the four-site
    case, where the first zero is tangent) is located by bisecting the
    analytic slope and accepting the minimum if the centroid vanishes
    there.  Returns None when the centroid never vanishes (two sites).
    """
    zfun = lambda t: float(centroid_localized_closed(config, t))
    grid = np.arange(1, _ROOT_SCAN_POINTS + 1) / _ROOT_SCAN_POINTS
    values = np.asarray(centroid_localized_closed(config, grid), dtype=float)

    below = np.flatnonzero(values < _ROOT_BAND)
    if below.size == 0:
        return None
    breaks = np.flatnonzero(np.diff(below) > 1)
    run_starts = [int(below[0]), *(int(below[i + 1]) for i in breaks)]
    run_ends = [*(int(below[i]) for i in breaks), int(below[-1])]

    for start, end in zip(run_starts, run_ends):
        segment = values[start : end + 1]
        negative = np.flatnonzero(segment < -1e-12)
        if negative.size:
            # transversal crossing: bracket from the last clearly positive
            # point (a grid node can sit right on the root, at noise level)
            i = start + int(negative[0])
            j = i - 1
            while j > 0 and values[j] <= 1e-12:
                j -= 1
            return _bisect(zfun, float(grid[j]), float(grid[i]), float(values[j]))

        lo = float(grid[max(start - 1, 0)])
        hi = float(grid[min(end + 1, grid.size - 1)])
        slope_lo = _centroid_slope(config, lo)
        slope_hi = _centroid_slope(config, hi)
        if slope_lo >= 0.0:
            t_star = lo
        elif slope_hi <= 0.0:
            t_star = hi        # still descending at the window end (boundary minimum)
        else:
            t_star = _bisect(lambda t: _centroid_slope(config, t), lo, hi, slope_lo)

        z_star = zfun(t_star)
        if abs(z_star) < 1e-10:
            return t_star      # tangent zero
        if z_star < 0.0:
            return _bisect(zfun, lo, t_star, zfun(lo))
        # dip does not reach zero; keep scanning
    return None


def diffusion_time(config: LatticeConfig) -> float | None:
    """Time for the site-0 walker to first reach maximal width.

    Closed form: None (never) for two sites, 1 for three, N / (2 (N - 2))
    for four or more.  The value is verified against the numerically found
    first centroid root; disagreement raises ConsistencyError.
    """
    n = config.n_sites
    if n == 2:
        closed = None
    elif n == 3:
        closed = 1.0
    else:
        closed = n / (2.0 * (n - 2))

    numeric = first_centroid_root(config)
    if closed is None or numeric is None:
        if closed is None and numeric is None:
            return None
        raise ConsistencyError(
            f"closed-form diffusion time {closed} but numerical root {numeric}"
        )
    if abs(closed - numeric) > _ROOT_MATCH_TOL:
        raise ConsistencyError(
            f"closed-form diffusion time {closed} disagrees with root {numeric}"
        )
    return closed


def reconstruction_time(config: LatticeConfig) -> float:
    """Time at which the walker re-localizes (even N) or peaks opposite (odd N)."""
    return config.n_sites / 2.0


def short_time_slope(config: LatticeConfig) -> float:
    """Initial growth rate of the width: a 2 pi sqrt((N - 1)(N - 2) / 3)."""
    n = config.n_sites
    return config.spacing * 2.0 * math.pi * math.sqrt((n - 1) * (n - 2) / 3.0)


def two_site_state(config: LatticeConfig, parity: str) -> QuantumState:
    """Equal superposition of sites 0 and 1 with even or odd relative sign.

    The phase on site 1 matches the translation convention, which puts the
    mean momentum at zero for both parities.
    """
    if parity not in PARITIES:
        raise InvalidParameterError(f"parity must be one of {PARITIES}, got {parity!r}")
    sign = 1.0 if parity == "even" else -1.0
    amps = np.zeros(config.n_sites, dtype=np.complex128)
    amps[0] = 1.0 / math.sqrt(2.0)
    amps[1] = sign * config.root_phase(config.parity_phase) / math.sqrt(2.0)
    return QuantumState(config, amps)


def rotated_centroid_two_site(config: LatticeConfig, parity: str, times):
    """Closed-form centroid of the two-site start, rotated onto the real axis.

    The rotation (half a site angle) compensates the offset of the initial
    distribution; the result is real and starts at cos(pi / N).
    """
    if parity not in PARITIES:
        raise InvalidParameterError(f"parity must be one of {PARITIES}, got {parity!r}")
    sign = 1.0 if parity == "even" else -1.0
    n = config.n_sites
    t = np.asarray(times, dtype=float)
    cos_half = math.cos(math.pi / n)
    d0 = dirichlet_ratio(n - 1, 2.0 * t, n)
    d_minus = dirichlet_ratio(n - 1, 2.0 * t - 1.0, n)
    d_plus = dirichlet_ratio(n - 1, 2.0 * t + 1.0, n)
    value = (cos_half * d0 + sign * 0.5 * (d_minus + d_plus) + cos_half - sign) / n
    return float(value) if np.ndim(times) == 0 else value


def rotated_centroid_two_site_direct(config: LatticeConfig, parity: str, time: float) -> complex:
    """Same quantity through explicit evolution of the two-site state.

    Returns the full complex value; its imaginary part is a roundoff-level
    residual and is deliberately not discarded.
    """
    n = config.n_sites
    evolved = evolve_state(two_site_state(config, parity), float(time))
    z = np.exp(2j * np.pi * np.arange(n) / n) @ evolved.probabilities
    return complex(np.exp(-1j * np.pi / n) * z)


@dataclass(frozen=True)
class CoverTimeEstimate:
    mean: float
    stderr: float
    trials: int


# trials are simulated in fixed-size blocks, each on its own child stream,
# so the estimate depends only on (seed, trials), not on scheduling
_COVER_BLOCK = 1 << 14


def classical_cover_time_mc(n_sites: int, trials: int, seed: int) -> CoverTimeEstimate:
    """Monte Carlo mean time for a symmetric random walk to visit every site.

    Walks start at site 0 and hop to a uniformly random neighbor each step;
    a walk stops once all ``n_sites`` sites have been seen.  Returns the
    sample mean and its standard error.  The exact expectation on the cycle
    is N (N - 1) / 2.
    """
    if n_sites < 2:
        raise InvalidLatticeError(f"need at least 2 sites, got {n_sites}")
    if trials < 1:
        raise InvalidParameterError(f"trials must be positive, got {trials}")

    blocks = (trials + _COVER_BLOCK - 1) // _COVER_BLOCK
    children = np.random.SeedSequence(seed).spawn(blocks)
    steps = np.empty(trials, dtype=np.int64)
    for b in range(blocks):
        start = b * _COVER_BLOCK
        count = min(_COVER_BLOCK, trials - start)
        rng = np.random.default_rng(children[b])
        steps[start : start + count] = _cover_block(n_sites, count, rng)

    mean = float(steps.mean())
    stderr = float(steps.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return CoverTimeEstimate(mean=mean, stderr=stderr, trials=trials)


def _cover_block(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    position = np.zeros(count, dtype=np.int64)
    visited = np.zeros((count, n), dtype=bool)
    visited[:, 0] = True
    remaining = np.full(count, n - 1, dtype=np.int64)
    steps = np.zeros(count, dtype=np.int64)
    alive = np.arange(count)
    while alive.size:
        hops = rng.integers(0, 2, size=alive.size) * 2 - 1
        position[alive] = (position[alive] + hops) % n
        steps[alive] += 1
        fresh = ~visited[alive, position[alive]]
        hit = alive[fresh]
        visited[hit, position[hit]] = True
        remaining[hit] -= 1
        alive = alive[remaining[alive] > 0]
    return steps
