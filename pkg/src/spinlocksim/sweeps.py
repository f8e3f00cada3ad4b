"""Parameter sweeps and their CSV serialization.

Every sweep builds its task list in a fixed grid order, evaluates the
cells (inline, or on a process pool that preserves input order), and
writes rows in that same order, so output files are byte-identical for
any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .analysis import (
    DegenerateSpectrumError,
    InsufficientHorizonError,
    _eig_sorted,
    detect_plateau,
    fourier_spectrum,
    spectral_lifetime,
)
from .config import ConfigError, RunConfig
from .dynamics import default_time_grid, evolve_super, initial_state_x
from .liouvillian import SimParams, build_total

__all__ = [
    "format_value",
    "write_csv",
    "run_tauc_sweep",
    "run_alpha_sweep",
    "run_contour",
    "run_eigen",
    "TRAJECTORY_HEADER",
    "trajectory_rows",
]

TRAJECTORY_HEADER = ("t_s", "Mx", "My", "Mz", "Mxx", "Myy", "Mzz", "Myz", "trace", "min_eig")


def format_value(v) -> str:
    """CSV cell text: 17 significant digits, true/false, nan for missing."""
    if v is None:
        return "nan"
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


def write_csv(path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_value(v) for v in row) + "\n")


def _map_ordered(fn, tasks, workers: int):
    if workers <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, tasks, chunksize=1))


def _scalar_coupling(cfg: RunConfig) -> float:
    if isinstance(cfg.omega_d_khz, tuple):
        raise ConfigError("sweep", "omega1_over_omega_d", "ratio sweeps need the scalar coupling form")
    wd = cfg.omega_d_khz * cfg.angular_scale
    if wd == 0.0:
        raise ConfigError("params", "omega_d_khz", "ratio sweeps need a nonzero coupling")
    return wd


def _ratios(cfg: RunConfig) -> tuple:
    if cfg.sweep_omega1_over_omega_d:
        return cfg.sweep_omega1_over_omega_d
    wd = _scalar_coupling(cfg)
    return (cfg.omega1_khz * cfg.angular_scale / wd,)


def _run_cell(params: SimParams, n_points: int):
    gen = build_total(params)
    traj = evolve_super(gen, initial_state_x(), default_time_grid(params, n_points))
    return traj


def _tauc_cell(task):
    params, n_points = task
    traj = _run_cell(params, n_points)
    try:
        rep = detect_plateau(traj)
    except InsufficientHorizonError:
        return (params.tau_c, np.nan, False, np.nan)
    if not rep.plateau_found:
        return (params.tau_c, np.nan, False, np.nan)
    return (params.tau_c, rep.fractional_lifetime, True, rep.mx_pre)


def run_tauc_sweep(cfg: RunConfig, workers: int = 1):
    """Rows (tau_c_s, omega1_over_omegad, fractional_lifetime, plateau_found, mx_pre)."""
    if not cfg.sweep_tau_c_ms:
        raise ConfigError("sweep", "tau_c_ms", "required for the correlation-time sweep")
    wd = _scalar_coupling(cfg)
    base = cfg.to_params()
    tasks = []
    order = []
    for ratio in _ratios(cfg):
        for tc_ms in cfg.sweep_tau_c_ms:
            tasks.append((base.with_(omega1=ratio * wd, tau_c=tc_ms * 1e-3), cfg.time_points))
            order.append(ratio)
    results = _map_ordered(_tauc_cell, tasks, workers)
    return [
        (tc, ratio, frac, found, mx_pre)
        for ratio, (tc, frac, found, mx_pre) in zip(order, results)
    ]


def _alpha_cell(task):
    params, n_points = task
    traj = _run_cell(params, n_points)
    spec = fourier_spectrum(traj)
    try:
        rep = detect_plateau(traj)
        mx_pre = rep.mx_pre if rep.plateau_found else np.nan
    except InsufficientHorizonError:
        mx_pre = np.nan
    return (params.alpha, spec.peak_height, mx_pre)


def run_alpha_sweep(cfg: RunConfig, workers: int = 1):
    """Rows (alpha_rad_s, omega1_over_omegad, peak_height, mx_pre)."""
    if not cfg.sweep_alpha_over_omega_d:
        raise ConfigError("sweep", "alpha_over_omega_d", "required for the shift sweep")
    wd = _scalar_coupling(cfg)
    for f in cfg.sweep_alpha_over_omega_d:
        if not 0.0 <= f <= 1.0:
            raise ConfigError(
                "sweep", "alpha_over_omega_d",
                f"{f:g} is outside [0, 1]: the shift analysis is valid only for alpha <= omega_d",
            )
    base = cfg.to_params()
    tasks = []
    order = []
    for ratio in _ratios(cfg):
        for f in cfg.sweep_alpha_over_omega_d:
            tasks.append((base.with_(omega1=ratio * wd, alpha=f * abs(wd)), cfg.time_points))
            order.append(ratio)
    results = _map_ordered(_alpha_cell, tasks, workers)
    return [
        (alpha, ratio, peak, mx_pre)
        for ratio, (alpha, peak, mx_pre) in zip(order, results)
    ]


def _contour_cell(task):
    (params,) = task
    gen = build_total(params)
    try:
        rep = spectral_lifetime(gen.l_total)
    except DegenerateSpectrumError:
        return None
    return rep.t_pre_spectral


def run_contour(cfg: RunConfig, workers: int = 1):
    """Spectral-gap lifetime on the (alpha/omega_d, tau_c) grid.

    Returns (rows, monotonicity) where rows are
    (alpha_over_omegad, tau_c_s, t_pre_spectral_s or None) in
    alpha-major order and monotonicity rows flag, per grid line,
    whether the lifetime is non-decreasing in tau_c (axis "tau_c")
    and non-increasing in the shift (axis "alpha").
    """
    if not cfg.sweep_alpha_over_omega_d:
        raise ConfigError("sweep", "alpha_over_omega_d", "required for the contour")
    if not cfg.sweep_tau_c_ms:
        raise ConfigError("sweep", "tau_c_ms", "required for the contour")
    wd = _scalar_coupling(cfg)
    base = cfg.to_params()
    fracs = cfg.sweep_alpha_over_omega_d
    taus = tuple(tc * 1e-3 for tc in cfg.sweep_tau_c_ms)
    tasks = [
        (base.with_(alpha=f * abs(wd), tau_c=tc),)
        for f in fracs
        for tc in taus
    ]
    values = _map_ordered(_contour_cell, tasks, workers)
    grid = np.asarray(values, dtype=object).reshape(len(fracs), len(taus))
    rows = [
        (f, tc, grid[i, j])
        for i, f in enumerate(fracs)
        for j, tc in enumerate(taus)
    ]
    mono = []
    for i, f in enumerate(fracs):
        seq = [v for v in grid[i, :] if v is not None]
        mono.append(("tau_c", f, _monotone(seq, up=True)))
    for j, tc in enumerate(taus):
        seq = [v for v in grid[:, j] if v is not None]
        mono.append(("alpha", tc, _monotone(seq, up=False)))
    return rows, mono


def _monotone(seq, up: bool) -> bool:
    """Lifetime grows with the correlation time and shrinks with the shift."""
    if up:
        return all(b >= a for a, b in zip(seq, seq[1:]))
    return all(b <= a for a, b in zip(seq, seq[1:]))


def run_eigen(cfg: RunConfig):
    """Rows (re, im, is_zero_mode) for the full generator, slow modes first."""
    gen = build_total(cfg.to_params())
    ev, zero = _eig_sorted(gen.l_total)
    return [(lam.real, lam.imag, bool(z)) for lam, z in zip(ev, zero)]


def trajectory_rows(traj):
    """Observable table rows matching TRAJECTORY_HEADER."""
    mab = traj.mab
    return [
        (
            traj.times[k], traj.mx[k], traj.my[k], traj.mz[k],
            mab[("x", "x")][k], mab[("y", "y")][k], mab[("z", "z")][k],
            mab[("y", "z")][k], traj.trace[k], traj.min_eig[k],
        )
        for k in range(len(traj.times))
    ]
