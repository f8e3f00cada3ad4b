"""Command-line entry points.

Exit codes: 0 on success, 2 on a configuration problem, 3 on a
numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

import numpy as np

from .analysis import InsufficientHorizonError, detect_plateau
from .config import ConfigError, parse_config
from .dynamics import NumericalError, default_time_grid, evolve_super, initial_state_x
from .liouvillian import build_total
from .sweeps import (
    TRAJECTORY_HEADER,
    run_alpha_sweep,
    run_contour,
    run_eigen,
    run_tauc_sweep,
    trajectory_rows,
    write_csv,
)

__all__ = ["main"]


def _default_workers() -> int:
    raw = os.environ.get("SPINLOCKSIM_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", required=True, help="INI run configuration")
    sub.add_argument("--out", default=None, help="output directory (overrides the config)")
    sub.add_argument(
        "--workers", type=int, default=_default_workers(),
        help="process count for sweep cells (default: SPINLOCKSIM_WORKERS or 1)",
    )
    sub.add_argument("--svg", action="store_true", help="also write SVG figures")
    sub.add_argument("--time-points", type=int, default=None, help="trajectory grid size override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlocksim",
        description="Spin-locked dipolar pair simulator: trajectories, sweeps, spectra",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    specs = [
        ("simulate", "evolve one trajectory and report its quasi-steady state", cmd_simulate),
        ("sweep-tauc", "fractional lifetime vs correlation time", cmd_sweep_tauc),
        ("sweep-alpha", "signal peak height vs chemical-shift strength", cmd_sweep_alpha),
        ("contour", "spectral-gap lifetime over the (shift, correlation-time) grid", cmd_contour),
        ("eigen", "dump the full generator spectrum", cmd_eigen),
    ]
    for name, help_text, func in specs:
        sub = subs.add_parser(name, help=help_text)
        _add_common(sub)
        sub.set_defaults(func=func)
    return parser


def _load(args):
    cfg = parse_config(args.config)
    if args.out is not None:
        cfg = dataclasses.replace(cfg, out_dir=args.out)
    if args.svg:
        cfg = dataclasses.replace(cfg, svg=True)
    if args.time_points is not None:
        if args.time_points < 2:
            raise ConfigError("grid", "time_points", "need at least 2 points")
        cfg = dataclasses.replace(cfg, time_points=args.time_points)
    os.makedirs(cfg.out_dir, exist_ok=True)
    return cfg


def _out(cfg, name: str) -> str:
    path = os.path.join(cfg.out_dir, name)
    return path


def cmd_simulate(args) -> int:
    cfg = _load(args)
    params = cfg.to_params()
    gen = build_total(params)
    traj = evolve_super(gen, initial_state_x(), default_time_grid(params, cfg.time_points))
    path = _out(cfg, "trajectory.csv")
    write_csv(path, TRAJECTORY_HEADER, trajectory_rows(traj))
    print(f"wrote {path}")
    try:
        rep = detect_plateau(traj)
    except InsufficientHorizonError as exc:
        print(f"plateau search skipped: {exc}")
    else:
        print(f"plateau_found: {'true' if rep.plateau_found else 'false'}")
        print(f"t_pre_analytic_s: {rep.t_pre_analytic:.6g}")
        if rep.plateau_found:
            print(f"t_pre_empirical_s: {rep.t_pre_empirical:.6g}")
            print(f"t_th_s: {rep.t_th:.6g}")
            print(f"mx_pre: {rep.mx_pre:.6g}")
            print(f"fractional_lifetime: {rep.fractional_lifetime:.6g}")
    if cfg.svg:
        svg_path = _out(cfg, "trajectory.svg")
        _write_trajectory_svg(svg_path, traj)
        print(f"wrote {svg_path}")
    return 0


def cmd_sweep_tauc(args) -> int:
    cfg = _load(args)
    rows = run_tauc_sweep(cfg, workers=args.workers)
    path = _out(cfg, "sweep_tauc.csv")
    write_csv(path, ("tau_c_s", "omega1_over_omegad", "fractional_lifetime", "plateau_found", "mx_pre"), rows)
    print(f"wrote {path}")
    if cfg.svg:
        svg_path = _out(cfg, "sweep_tauc.svg")
        _write_tauc_svg(svg_path, rows)
        print(f"wrote {svg_path}")
    return 0


def cmd_sweep_alpha(args) -> int:
    cfg = _load(args)
    rows = run_alpha_sweep(cfg, workers=args.workers)
    path = _out(cfg, "sweep_alpha.csv")
    write_csv(path, ("alpha_rad_s", "omega1_over_omegad", "peak_height", "mx_pre"), rows)
    print(f"wrote {path}")
    if cfg.svg:
        svg_path = _out(cfg, "sweep_alpha.svg")
        _write_alpha_svg(svg_path, rows)
        print(f"wrote {svg_path}")
    return 0


def cmd_contour(args) -> int:
    cfg = _load(args)
    rows, mono = run_contour(cfg, workers=args.workers)
    path = _out(cfg, "contour.csv")
    write_csv(path, ("alpha_over_omegad", "tau_c_s", "t_pre_spectral_s"), rows)
    print(f"wrote {path}")
    mono_path = _out(cfg, "contour_monotonicity.csv")
    write_csv(mono_path, ("axis", "fixed_value", "monotone"), mono)
    print(f"wrote {mono_path}")
    if cfg.svg:
        svg_path = _out(cfg, "contour.svg")
        _write_contour_svg(svg_path, cfg, rows)
        print(f"wrote {svg_path}")
    return 0


def cmd_eigen(args) -> int:
    cfg = _load(args)
    rows = run_eigen(cfg)
    path = _out(cfg, "eigenvalues.csv")
    write_csv(path, ("re", "im", "is_zero_mode"), rows)
    print(f"wrote {path}")
    if cfg.svg:
        svg_path = _out(cfg, "eigenvalues.svg")
        _write_eigen_svg(svg_path, rows)
        print(f"wrote {svg_path}")
    return 0


def _agg_axes():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0), constrained_layout=True)
    return plt, fig, ax


def _write_trajectory_svg(path, traj) -> None:
    plt, fig, ax = _agg_axes()
    positive = traj.times > 0
    ax.semilogx(traj.times[positive], traj.mx[positive], lw=1.0)
    ax.set_xlabel("t (s)")
    ax.set_ylabel("M_x")
    fig.savefig(path)
    plt.close(fig)


def _write_tauc_svg(path, rows) -> None:
    plt, fig, ax = _agg_axes()
    ratios = sorted({r[1] for r in rows})
    for ratio in ratios:
        pts = [(r[0], r[2]) for r in rows if r[1] == ratio and r[3]]
        if pts:
            xs, ys = zip(*pts)
            ax.loglog(xs, ys, "o-", label=f"w1/wd = {ratio:g}")
    ax.set_xlabel("tau_c (s)")
    ax.set_ylabel("(t_th - t_pre)/t_pre")
    if ratios:
        ax.legend()
    fig.savefig(path)
    plt.close(fig)


def _write_alpha_svg(path, rows) -> None:
    plt, fig, ax = _agg_axes()
    ratios = sorted({r[1] for r in rows})
    for ratio in ratios:
        pts = [(r[0], r[2]) for r in rows if r[1] == ratio]
        xs, ys = zip(*pts)
        ax.plot(xs, ys, "o-", label=f"w1/wd = {ratio:g}")
    ax.set_xlabel("alpha (rad/s)")
    ax.set_ylabel("peak height")
    ax.legend()
    fig.savefig(path)
    plt.close(fig)


def _write_contour_svg(path, cfg, rows) -> None:
    plt, fig, ax = _agg_axes()
    fracs = sorted({r[0] for r in rows})
    taus = sorted({r[1] for r in rows})
    grid = np.full((len(fracs), len(taus)), np.nan)
    lut = {(r[0], r[1]): r[2] for r in rows}
    for i, f in enumerate(fracs):
        for j, tc in enumerate(taus):
            v = lut.get((f, tc))
            if v is not None:
                grid[i, j] = np.log10(v)
    mesh = ax.pcolormesh(taus, fracs, grid, shading="nearest")
    ax.set_xscale("log")
    ax.set_xlabel("tau_c (s)")
    ax.set_ylabel("alpha / omega_d")
    fig.colorbar(mesh, ax=ax, label="log10 t_pre_spectral (s)")
    fig.savefig(path)
    plt.close(fig)


def _write_eigen_svg(path, rows) -> None:
    plt, fig, ax = _agg_axes()
    re = [r[0] for r in rows]
    im = [r[1] for r in rows]
    zero = [r[2] for r in rows]
    colors = ["tab:red" if z else "tab:blue" for z in zero]
    ax.scatter(re, im, c=colors, s=18)
    ax.set_xlabel("Re (1/s)")
    ax.set_ylabel("Im (rad/s)")
    fig.savefig(path)
    plt.close(fig)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
