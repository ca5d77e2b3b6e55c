"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines; every tolerance is pinned here.
"""

import math
import time

import numpy as np

from ringdiff import (
    amplitude_localized,
    amplitudes_localized,
    basis_kernel,
    basis_state,
    centroid_localized_closed,
    centroid_localized_direct,
    check_periodicity,
    check_symmetry,
    classical_cover_time_mc,
    diffusion_time,
    evolve_state,
    first_centroid_root,
    make_config,
    random_packet,
    reconstruction_check,
    rotated_centroid_two_site,
    rotated_centroid_two_site_direct,
    short_time_slope,
    two_site_state,
    width_localized_closed,
)
from ringdiff.cli import main


def report(label, passed, detail):
    print(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
    assert passed, f"{label}: {detail}"


def test_criterion_01_diffusion_time_table():
    start = time.perf_counter()
    worst = 0.0
    for n in (2, 3, 4, 5, 6, 8, 16, 17, 33, 34, 100):
        cfg = make_config(n)
        closed = diffusion_time(cfg)
        root = first_centroid_root(cfg)
        if n == 2:
            ok = closed is None and root is None
            if not ok:
                worst = math.inf
            continue
        expected = 1.0 if n == 3 else n / (2.0 * (n - 2))
        assert closed == expected
        worst = max(worst, abs(root - closed))
    elapsed = time.perf_counter() - start
    report(
        "criterion 01 diffusion-time table",
        worst < 1e-9 and elapsed < 1.0,
        f"max |dT| = {worst:.2e}, runtime {elapsed:.2f} s",
    )


def test_criterion_02_antipode_exclusion():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for n in (2, 4, 6, 8, 16, 34):
        cfg = make_config(n)
        times = rng.uniform(0.0, 4.0 * n, 100)
        block = amplitudes_localized(cfg, times)
        worst = max(worst, float(np.max(np.abs(block[:, n // 2]))))
    elapsed = time.perf_counter() - start
    report(
        "criterion 02 antipode exclusion",
        worst < 1e-12 and elapsed < 1.0,
        f"max |amplitude| = {worst:.2e}, runtime {elapsed:.2f} s",
    )


def test_criterion_03_reconstruction():
    worst_even = 0.0
    for n in range(4, 35, 2):
        cfg = make_config(n)
        worst_even = max(worst_even, abs(abs(amplitude_localized(cfg, 0, n / 2)) - 1.0))

    worst_centroid = 0.0
    worst_width = 0.0
    for n in range(3, 34, 2):
        cfg = make_config(n)
        target = -(n - 2) / n
        worst_centroid = max(
            worst_centroid,
            abs(centroid_localized_closed(cfg, n / 2) - target),
            abs(centroid_localized_direct(cfg, n / 2) - target),
        )
        expected_width = cfg.spacing * 2.0 * math.sqrt(n - 1)
        worst_width = max(
            worst_width, abs(width_localized_closed(cfg, n / 2) - expected_width)
        )

    report(
        "criterion 03 reconstruction",
        worst_even < 1e-10 and worst_centroid < 1e-10 and worst_width < 1e-8,
        f"even |.|c_0|-1| = {worst_even:.2e}, odd centroid dev = {worst_centroid:.2e},"
        f" odd width dev = {worst_width:.2e}",
    )


def test_criterion_04_periodicity():
    worst = 0.0
    for n in (5, 6, 7, 8):
        rep = check_periodicity(make_config(n), 4.0 * n, 50, seed=n)
        expected_amp = n if n % 2 else 4 * n
        expected_prob = n if n % 2 else n / 2
        assert rep.amplitude_period == expected_amp
        assert rep.probability_period == expected_prob
        worst = max(worst, rep.max_amplitude_deviation, rep.max_probability_deviation)

    cfg6 = make_config(6)
    gap = float(
        np.max(np.abs(amplitudes_localized(cfg6, 0.37) - amplitudes_localized(cfg6, 3.37)))
    )
    report(
        "criterion 04 periodicity",
        worst < 1e-10 and gap > 1e-3,
        f"max period deviation = {worst:.2e}, six-site amplitude gap over"
        f" probability period = {gap:.2e}",
    )


def test_criterion_05_symmetry():
    rng = np.random.default_rng(5)
    worst = 0.0
    for n in range(2, 21):
        cfg = make_config(n)
        for t in rng.uniform(0.0, 2.0 * n, 50):
            worst = max(worst, check_symmetry(cfg, t).max_relation_deviation)
    report("criterion 05 mirror symmetry", worst < 1e-12, f"max deviation = {worst:.2e}")


def test_criterion_06_closed_vs_brute_centroid():
    rng = np.random.default_rng(6)
    worst = 0.0
    for n in range(2, 41):
        cfg = make_config(n)
        times = list(rng.uniform(0.0, float(n), 200))
        for k in (0, 1, 2):
            pivot = k * n / 2.0
            times += [pivot, pivot + 1e-7]
            if pivot - 1e-7 >= 0.0:
                times.append(pivot - 1e-7)
        times = np.asarray(times)
        closed = centroid_localized_closed(cfg, times)
        direct = centroid_localized_direct(cfg, times)
        worst = max(worst, float(np.max(np.abs(closed - direct))))
    report(
        "criterion 06 closed vs brute centroid",
        worst < 1e-10,
        f"max deviation = {worst:.2e} (incl. T within 1e-7 of singular points)",
    )


def test_criterion_07_short_time_slope():
    worst_rel = 0.0
    h = 1e-6
    for n in (3, 5, 16, 33):
        cfg = make_config(n)
        slope = short_time_slope(cfg)
        estimate = width_localized_closed(cfg, h) / h
        worst_rel = max(worst_rel, abs(estimate - slope) / slope)
    report(
        "criterion 07 short-time slope",
        worst_rel < 1e-4,
        f"max relative deviation = {worst_rel:.2e}",
    )


def test_criterion_08_two_site():
    rng = np.random.default_rng(8)
    worst_route = 0.0
    worst_endpoint = 0.0
    for n in (33, 34):
        cfg = make_config(n)
        for parity in ("even", "odd"):
            for t in rng.uniform(0.0, float(n), 200):
                closed = rotated_centroid_two_site(cfg, parity, t)
                direct = rotated_centroid_two_site_direct(cfg, parity, t)
                worst_route = max(worst_route, abs(closed - direct))
            sign = 1.0 if parity == "even" else -1.0
            worst_endpoint = max(
                worst_endpoint,
                abs(rotated_centroid_two_site(cfg, parity, 0.0) - math.cos(math.pi / n)),
            )
            if n % 2:
                minimum = -((n - 2) * math.cos(math.pi / n) + sign * 2.0) / n
                worst_endpoint = max(
                    worst_endpoint,
                    abs(rotated_centroid_two_site(cfg, parity, n / 2) - minimum),
                )
    report(
        "criterion 08 two-site closed form",
        worst_route < 1e-9 and worst_endpoint < 1e-10,
        f"max route deviation = {worst_route:.2e},"
        f" max endpoint deviation = {worst_endpoint:.2e}",
    )


def test_criterion_09_continuum_reconstruction():
    start = time.perf_counter()
    worst = 0.0
    for seed in range(20):
        packet = random_packet(1.0, 1.0, 64, seed)
        worst = max(worst, reconstruction_check(packet))
    elapsed = time.perf_counter() - start
    report(
        "criterion 09 continuum reconstruction",
        worst < 1e-10 and elapsed < 2.0,
        f"max pointwise deviation = {worst:.2e}, runtime {elapsed:.2f} s",
    )


def test_criterion_10_classical_cover_time():
    start = time.perf_counter()
    est16 = classical_cover_time_mc(16, 100_000, seed=10)
    est3 = classical_cover_time_mc(3, 100_000, seed=10)
    elapsed = time.perf_counter() - start
    rel16 = abs(est16.mean - 120.0) / 120.0
    rel3 = abs(est3.mean - 3.0) / 3.0
    report(
        "criterion 10 classical cover time",
        rel16 < 0.02 and rel3 < 0.02 and elapsed < 5.0,
        f"N=16 mean {est16.mean:.2f} (rel {rel16:.2%}), N=3 mean {est3.mean:.4f}"
        f" (rel {rel3:.2%}), runtime {elapsed:.2f} s",
    )


def test_criterion_11_unitarity():
    worst_kernel = 0.0
    for n in range(2, 65):
        k = basis_kernel(make_config(n)).matrix
        worst_kernel = max(
            worst_kernel, float(np.max(np.abs(k @ k.conj().T - np.eye(n))))
        )

    rng = np.random.default_rng(11)
    worst_norm = 0.0
    for n in (2, 3, 5, 8, 13, 16, 33, 34):
        cfg = make_config(n)
        for t in rng.uniform(0.0, 4.0 * n, 25):
            probs = np.abs(amplitudes_localized(cfg, t)) ** 2
            worst_norm = max(worst_norm, abs(float(probs.sum()) - 1.0))
            evolved = evolve_state(two_site_state(cfg, "odd"), t)
            worst_norm = max(
                worst_norm, abs(float(np.sum(np.abs(evolved.amplitudes) ** 2)) - 1.0)
            )
    report(
        "criterion 11 unitarity",
        worst_kernel < 1e-12 and worst_norm < 1e-12,
        f"max kernel deviation = {worst_kernel:.2e}, max norm deviation = {worst_norm:.2e}",
    )


def test_criterion_12_deterministic_csv(tmp_path, capsys):
    args = ["centroid", "--n", "16", "--t-end", "8", "--samples", "101"]
    blobs = []
    for stem in ("first", "second"):
        base = tmp_path / stem
        code = main(args + ["--out", str(base)])
        assert code == 0
        blobs.append(base.with_suffix(".csv").read_bytes())
    capsys.readouterr()
    identical = blobs[0] == blobs[1]
    report(
        "criterion 12 deterministic CSV",
        identical,
        f"two runs, {len(blobs[0])} bytes each, byte-identical = {identical}",
    )
