import math

import numpy as np
import pytest

from ringdiff import (
    InvalidParameterError,
    NormalizationError,
    RingWavefunction,
    centroid_localized_closed,
    evaluate_on_grid,
    evolve_ring,
    gaussian_packet,
    half_integer_mode_demo,
    make_config,
    position_grid,
    random_packet,
    reconstruction_check,
    ring_reconstruction_time,
    ring_wavefunction,
)


def two_bump_packet(perimeter, mass, max_mode, separation):
    """Two narrow humps a fixed distance apart, built in mode space."""
    n = np.arange(-max_mode, max_mode + 1)
    envelope = np.exp(-0.5 * (n / (max_mode / 4.0)) ** 2)
    raw = envelope * (1.0 + np.exp(-2j * np.pi * n * separation / perimeter))
    return RingWavefunction(perimeter, mass, raw / np.linalg.norm(raw))


class TestConstruction:
    def test_rejects_even_length(self):
        with pytest.raises(InvalidParameterError):
            ring_wavefunction(1.0, 1.0, np.array([1.0, 0.0]))

    def test_rejects_unnormalized(self):
        with pytest.raises(NormalizationError):
            ring_wavefunction(1.0, 1.0, np.array([1.0, 1.0, 0.0]))

    @pytest.mark.parametrize("perimeter,mass", [(0.0, 1.0), (1.0, -1.0)])
    def test_rejects_bad_parameters(self, perimeter, mass):
        with pytest.raises(InvalidParameterError):
            ring_wavefunction(perimeter, mass, np.array([1.0]))

    def test_mode_numbers(self):
        wf = random_packet(1.0, 1.0, 3, seed=0)
        assert wf.max_mode == 3
        assert list(wf.mode_numbers) == [-3, -2, -1, 0, 1, 2, 3]


class TestEvolveRing:
    def test_zero_time_identity(self):
        wf = random_packet(2.0, 1.5, 16, seed=4)
        out = evolve_ring(wf, 0.0)
        assert np.max(np.abs(out.coefficients - wf.coefficients)) < 1e-15

    def test_single_mode_is_stationary(self):
        coeffs = np.zeros(7, complex)
        coeffs[5] = 1.0      # mode n = 2
        wf = ring_wavefunction(1.0, 1.0, coeffs)
        before = np.abs(evaluate_on_grid(wf, 256)) ** 2
        after = np.abs(evaluate_on_grid(evolve_ring(wf, 0.37), 256)) ** 2
        assert np.max(np.abs(after - before)) < 1e-14

    def test_two_mode_beat_against_direct_formula(self):
        perimeter, mass = 1.0, 1.0
        coeffs = np.zeros(3, complex)
        coeffs[1] = 1.0 / math.sqrt(2.0)   # n = 0
        coeffs[2] = 1.0 / math.sqrt(2.0)   # n = 1
        wf = ring_wavefunction(perimeter, mass, coeffs)
        rate = (2.0 * np.pi / perimeter) ** 2 / (2.0 * mass)
        y = position_grid(perimeter, 128)
        for t in (0.0, 0.013, 0.05, 0.11, 0.2):
            expected = (
                coeffs[1]
                + coeffs[2] * np.exp(-1j * rate * t) * np.exp(2j * np.pi * y / perimeter)
            ) / math.sqrt(2.0 * math.pi)
            values = evaluate_on_grid(evolve_ring(wf, t), 128)
            assert np.max(np.abs(values - expected)) < 1e-13

    def test_two_mode_beat_period(self):
        # densities of an (n=0, n=1) superposition repeat after m L^2 / pi
        perimeter, mass = 1.0, 1.0
        coeffs = np.array([0.0, 0.6, 0.8], dtype=complex)
        wf = ring_wavefunction(perimeter, mass, coeffs)
        period = mass * perimeter**2 / math.pi
        d0 = np.abs(evaluate_on_grid(wf, 128)) ** 2
        d1 = np.abs(evaluate_on_grid(evolve_ring(wf, period), 128)) ** 2
        assert np.max(np.abs(d1 - d0)) < 1e-12

    def test_norm_conserved(self):
        wf = random_packet(3.0, 0.7, 32, seed=9)
        out = evolve_ring(wf, 12.34)
        assert abs(np.sum(np.abs(out.coefficients) ** 2) - 1.0) < 1e-14


class TestReconstruction:
    def test_time_scaling(self):
        wf = random_packet(10.0, 2.0, 4, seed=1)
        assert ring_reconstruction_time(wf) == pytest.approx(
            2.0 * 100.0 / (2.0 * math.pi), abs=1e-12
        )

    def test_gaussian_packet(self):
        wf = gaussian_packet(1.0, 1.0, 64)
        assert reconstruction_check(wf) < 1e-10

    def test_random_packets_across_truncations(self):
        truncations = (1, 4, 16, 64, 128, 256)
        for seed in range(20):
            wf = random_packet(1.0, 1.0, truncations[seed % len(truncations)], seed)
            assert reconstruction_check(wf) < 1e-10

    def test_constant_mode_exact(self):
        wf = ring_wavefunction(1.0, 1.0, np.array([1.0 + 0.0j]))
        assert reconstruction_check(wf) == 0.0

    def test_two_bump_packet(self):
        wf = two_bump_packet(1.0, 1.0, 48, separation=0.04)
        assert reconstruction_check(wf) < 1e-10

    def test_odd_grid_rejected(self):
        wf = random_packet(1.0, 1.0, 4, seed=0)
        with pytest.raises(InvalidParameterError):
            reconstruction_check(wf, n_points=255)

    def test_not_reconstructed_at_generic_time(self):
        # half the reconstruction time leaves the packet spread out
        wf = gaussian_packet(1.0, 1.0, 64)
        t_half = 0.5 * ring_reconstruction_time(wf)
        initial = evaluate_on_grid(wf)
        evolved = evaluate_on_grid(evolve_ring(wf, t_half))
        shifted = np.roll(initial, initial.size // 2)
        assert np.max(np.abs(evolved - shifted)) > 0.1


class TestHalfIntegerModes:
    def test_boundary_antisymmetry(self):
        report = half_integer_mode_demo(1.0, 8)
        assert report.max_boundary_ratio_deviation < 1e-12

    def test_lowest_mode_explicitly(self):
        phi = lambda y: np.exp(1j * 2.0 * np.pi * 0.5 * y)
        assert phi(0.5) / phi(-0.5) == pytest.approx(-1.0, abs=1e-14)

    def test_half_modes_have_doubled_period(self):
        report = half_integer_mode_demo(2.0, 6)
        assert report.max_half_period_deviation < 1e-12

    def test_integer_modes_have_ring_period(self):
        report = half_integer_mode_demo(2.0, 6)
        assert report.max_integer_period_deviation < 1e-14


class TestDiscreteConsistency:
    @pytest.mark.parametrize("n", [17, 33])
    def test_odd_lattice_centroid_mirrors_exact_shift(self, n):
        # the discrete walker concentrates opposite the start exactly where
        # the continuum packet lands after its reconstruction time
        value = centroid_localized_closed(make_config(n), n / 2)
        assert value == pytest.approx(-(n - 2) / n, abs=1e-12)
