"""Command-line front end: CSV time series, SVG figures, one-shot reports.

Subcommands: evolve, centroid, two-site, times, cover, ring.  Wherever a
closed form and a brute-force route both exist, the emitted CSV carries
both columns and the command fails (exit 2) if they disagree beyond
tolerance.  Exit codes: 0 success, 1 usage error, 2 consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .continuum import (
    evaluate_on_grid,
    evolve_ring,
    position_grid,
    random_packet,
    ring_reconstruction_time,
    reconstruction_check,
)
from .errors import (
    ConsistencyError,
    InvalidLatticeError,
    InvalidParameterError,
    NormalizationError,
)
from .evolution import amplitude_period, amplitudes_localized, probability_period
from .lattice import make_config
from .ringstats import (
    centroid_localized_closed,
    centroid_localized_direct,
    classical_cover_time_mc,
    diffusion_time,
    reconstruction_time,
    rotated_centroid_two_site,
    rotated_centroid_two_site_direct,
    width_localized_closed,
)

OK = 0
USAGE_ERROR = 1
CONSISTENCY_FAILURE = 2

OUTDIR_ENV = "RINGDIFF_OUTDIR"

CENTROID_AUDIT_TOL = 1e-10
TWO_SITE_AUDIT_TOL = 1e-9
RING_DEVIATION_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; exit code 2 is reserved for consistency failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _int_flag(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


def _site_list(text):
    """Site counts as a single value ('8'), a range ('2:10', '2-10'), or a list ('2,3,8')."""
    try:
        for sep in (":", "-"):
            if sep in text:
                lo, _, hi = text.partition(sep)
                return list(range(int(lo), int(hi) + 1))
        if "," in text:
            return [int(tok) for tok in text.split(",")]
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse site counts from {text!r}")


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _resolve_base(args, default_stem: str) -> str:
    if args.out:
        base = args.out
        for suffix in (".csv", ".svg"):
            if base.endswith(suffix):
                base = base[: -len(suffix)]
        return base
    outdir = os.environ.get(OUTDIR_ENV, ".")
    return os.path.join(outdir, default_stem)


def _emit(args, default_stem, header, rows, render=None):
    """Write the CSV (file or stdout) and optionally render the figure."""
    wants_csv = args.format in ("csv", "both")
    wants_svg = args.format in ("svg", "both") and render is not None
    if wants_csv:
        text = _csv_text(header, rows)
        if args.out is None:
            sys.stdout.write(text)
        else:
            path = _resolve_base(args, default_stem) + ".csv"
            with open(path, "w", newline="") as handle:
                handle.write(text)
            print(f"wrote {path}", file=sys.stderr)
    if wants_svg:
        path = _resolve_base(args, default_stem) + ".svg"
        render(path)
        print(f"wrote {path}", file=sys.stderr)


def _time_grid(args, default_end: float) -> np.ndarray:
    t_end = args.t_end if args.t_end is not None else default_end
    if args.samples < 2:
        raise _UsageError(f"need at least 2 samples, got {args.samples}")
    if args.t_start < 0:
        raise _UsageError(f"start time must be nonnegative, got {args.t_start}")
    if not t_end > args.t_start:
        raise _UsageError(f"end time {t_end} must exceed start time {args.t_start}")
    return np.linspace(args.t_start, t_end, args.samples)


def cmd_evolve(args) -> int:
    config = make_config(args.n, args.a, args.mass)
    times = _time_grid(args, default_end=float(config.n_sites))
    probs = np.abs(amplitudes_localized(config, times)) ** 2
    n = config.n_sites
    rows = [
        (_fmt(t), str(x), _fmt(probs[i, x]))
        for i, t in enumerate(times)
        for x in range(n)
    ]

    def render(path):
        from .plots import save_series_figure

        curves = [(f"x={x}" if n <= 10 else "", probs[:, x]) for x in range(n)]
        save_series_figure(
            path, times, curves,
            xlabel="T", ylabel="occupation probability",
            title=f"site occupation, N={n}",
        )

    _emit(args, f"evolve_n{n}", ("T", "x", "prob"), rows, render)
    return OK


def cmd_centroid(args) -> int:
    config = make_config(args.n, args.a, args.mass)
    times = _time_grid(args, default_end=float(config.n_sites))
    closed = np.atleast_1d(centroid_localized_closed(config, times))
    direct = np.atleast_1d(centroid_localized_direct(config, times))
    widths = np.atleast_1d(width_localized_closed(config, times))

    deviation = np.abs(closed - direct)
    worst = int(np.argmax(deviation))
    if deviation[worst] > CENTROID_AUDIT_TOL:
        print(
            f"consistency failure: centroid routes differ by {deviation[worst]:.3e}"
            f" at T={times[worst]!r}",
            file=sys.stderr,
        )
        return CONSISTENCY_FAILURE

    rows = [
        (_fmt(t), _fmt(closed[i]), _fmt(direct[i].real), _fmt(widths[i]))
        for i, t in enumerate(times)
    ]

    def render(path):
        from .plots import save_series_figure

        save_series_figure(
            path, times, [("Z(T)", closed)],
            xlabel="T", ylabel="centroid",
            title=f"centroid of a localized start, N={config.n_sites}",
        )

    _emit(args, f"centroid_n{config.n_sites}", ("T", "Z_closed", "Z_brute", "width"), rows, render)
    return OK


def cmd_two_site(args) -> int:
    config = make_config(args.n, args.a, args.mass)
    times = _time_grid(args, default_end=float(config.n_sites))
    closed = np.atleast_1d(rotated_centroid_two_site(config, args.parity, times))
    direct = np.array(
        [rotated_centroid_two_site_direct(config, args.parity, t) for t in times]
    )

    deviation = np.abs(closed - direct)
    worst = int(np.argmax(deviation))
    if deviation[worst] > TWO_SITE_AUDIT_TOL:
        print(
            f"consistency failure: two-site centroid routes differ by {deviation[worst]:.3e}"
            f" at T={times[worst]!r}",
            file=sys.stderr,
        )
        return CONSISTENCY_FAILURE

    rows = [
        (_fmt(t), _fmt(closed[i]), _fmt(direct[i].real))
        for i, t in enumerate(times)
    ]

    def render(path):
        from .plots import save_series_figure

        save_series_figure(
            path, times, [(f"parity {args.parity}", closed)],
            xlabel="T", ylabel="rotated centroid",
            title=f"two-site start, N={config.n_sites}",
        )

    _emit(
        args, f"two_site_{args.parity}_n{config.n_sites}",
        ("T", "Ztilde_closed", "Ztilde_brute"), rows, render,
    )
    return OK


def cmd_times(args) -> int:
    rows = []
    for n in args.n:
        config = make_config(n, args.a, args.mass)
        t_d = diffusion_time(config)
        rows.append(
            (
                str(n),
                "inf" if t_d is None else _fmt(t_d),
                _fmt(reconstruction_time(config)),
                _fmt(amplitude_period(n)),
                _fmt(probability_period(n)),
            )
        )
    _emit(args, "times", ("N", "T_D", "T_R", "amplitude_period", "probability_period"), rows)
    return OK


def cmd_cover(args) -> int:
    estimate = classical_cover_time_mc(args.n, args.trials, args.seed)
    exact = args.n * (args.n - 1) / 2.0
    relative = abs(estimate.mean - exact) / exact
    print(f"sites: {args.n}")
    print(f"trials: {estimate.trials}")
    print(f"seed: {args.seed}")
    print(f"mean cover time: {_fmt(estimate.mean)}")
    print(f"standard error: {_fmt(estimate.stderr)}")
    print(f"exact mean N(N-1)/2: {_fmt(exact)}")
    print(f"relative deviation: {_fmt(relative)}")
    if args.out:
        header = ("N", "trials", "seed", "mean", "stderr", "exact")
        row = (
            str(args.n), str(estimate.trials), str(args.seed),
            _fmt(estimate.mean), _fmt(estimate.stderr), _fmt(exact),
        )
        path = _resolve_base(args, f"cover_n{args.n}") + ".csv"
        with open(path, "w", newline="") as handle:
            handle.write(_csv_text(header, [row]))
        print(f"wrote {path}", file=sys.stderr)
    return OK


def cmd_ring(args) -> int:
    packet = random_packet(args.length, args.mass, args.modes, args.seed)
    t_r = ring_reconstruction_time(packet)
    deviation = reconstruction_check(packet)
    print(f"perimeter: {_fmt(args.length)}")
    print(f"mass: {_fmt(args.mass)}")
    print(f"modes: -{args.modes}..{args.modes}")
    print(f"seed: {args.seed}")
    print(f"reconstruction time: {_fmt(t_r)}")
    print(f"max deviation: {deviation:.3e}")

    if args.out or args.format in ("svg", "both"):
        y = position_grid(args.length)
        initial = np.abs(evaluate_on_grid(packet)) ** 2
        final = np.abs(evaluate_on_grid(evolve_ring(packet, t_r))) ** 2
        rows = [
            (_fmt(y[i]), _fmt(initial[i]), _fmt(final[i]))
            for i in range(y.size)
        ]

        def render(path):
            from .plots import save_series_figure

            save_series_figure(
                path, y,
                [("initial density", initial), ("density at t_R", final)],
                xlabel="y", ylabel="probability density",
                title=f"ring reconstruction, L={args.length:g}",
            )

        _emit(args, f"ring_m{args.modes}", ("y", "density_initial", "density_at_t_R"), rows, render)

    if deviation > RING_DEVIATION_TOL:
        print(
            f"consistency failure: reconstruction deviation {deviation:.3e}"
            f" exceeds {RING_DEVIATION_TOL:.1e}",
            file=sys.stderr,
        )
        return CONSISTENCY_FAILURE
    return OK


def _add_lattice_flags(parser, site_type=_int_flag):
    parser.add_argument("--n", type=site_type, required=True, help="site count")
    parser.add_argument("--a", type=float, default=1.0, help="lattice constant")
    parser.add_argument("--mass", type=float, default=1.0, help="particle mass")


def _add_series_flags(parser):
    parser.add_argument("--t-start", type=float, default=0.0, help="first sampled time")
    parser.add_argument("--t-end", type=float, default=None, help="last sampled time (default N)")
    parser.add_argument("--samples", type=int, default=201, help="number of time samples")


def _add_output_flags(parser):
    parser.add_argument("--out", default=None, help="output path base; .csv/.svg appended")
    parser.add_argument(
        "--format", choices=("csv", "svg", "both"), default="csv", help="what to emit"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ringdiff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="occupation probabilities over time")
    _add_lattice_flags(p)
    _add_series_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("centroid", help="centroid and width of a localized start")
    _add_lattice_flags(p)
    _add_series_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_centroid)

    p = sub.add_parser("two-site", help="rotated centroid of a two-site start")
    _add_lattice_flags(p)
    _add_series_flags(p)
    p.add_argument("--parity", choices=("even", "odd"), default="even")
    _add_output_flags(p)
    p.set_defaults(func=cmd_two_site)

    p = sub.add_parser("times", help="diffusion/reconstruction times and periods")
    _add_lattice_flags(p, site_type=_site_list)
    _add_output_flags(p)
    p.set_defaults(func=cmd_times)

    p = sub.add_parser("cover", help="classical covering-time Monte Carlo")
    _add_lattice_flags(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="optional CSV path base")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("ring", help="continuum-ring reconstruction check")
    p.add_argument("--length", type=float, default=1.0, help="ring perimeter")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--modes", type=_int_flag, default=64, help="mode cutoff M")
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)
    p.set_defaults(func=cmd_ring)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (InvalidLatticeError, InvalidParameterError, NormalizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return CONSISTENCY_FAILURE


if __name__ == "__main__":
    sys.exit(main())
