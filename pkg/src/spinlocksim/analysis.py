"""Characterization instruments: plateau detection, Liouvillian
spectral-gap lifetime, and the Fourier peak of the transverse signal."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dynamics import Trajectory
from .liouvillian import SimParams, t_pre_analytic, t_th_analytic

__all__ = [
    "AnalysisError",
    "InsufficientHorizonError",
    "PlateauNotFoundError",
    "DegenerateSpectrumError",
    "PlateauReport",
    "SpectralReport",
    "SpectrumF",
    "detect_plateau",
    "fractional_lifetime",
    "zero_mode_count",
    "spectral_lifetime",
    "fourier_spectrum",
]

# Eigenvalues below this fraction of the spectral radius count as zero
# modes; scale-free across the kHz-GHz parameter span.
ZERO_MODE_REL_TOL = 1e-9

# Relative separation that makes two decay rates distinct.
GAP_DEGENERACY_REL_TOL = 1e-6


class AnalysisError(RuntimeError):
    pass


class InsufficientHorizonError(AnalysisError):
    """Trajectory too short to bracket the transient."""


class PlateauNotFoundError(AnalysisError):
    """No quasi-steady window qualifies."""


class DegenerateSpectrumError(AnalysisError):
    """No pair of distinct slow decay rates exists."""


@dataclass(frozen=True)
class PlateauReport:
    """Empirical quasi-steady-state detection result.

    ``t_pre_analytic`` is 1/(kappa^2 tau_c); the empirical fields hold
    nan (or inf for a never-crossed threshold) when undefined.
    """

    plateau_found: bool
    t_pre_analytic: float
    t_pre_empirical: float
    t_th: float
    mx_pre: float
    mx_final: float
    fractional_lifetime: float
    rel_tol: float

    def __post_init__(self):
        if self.plateau_found:
            assert self.t_th > self.t_pre_empirical > 0
            assert self.fractional_lifetime >= 0


@dataclass(frozen=True)
class SpectralReport:
    """Liouvillian spectrum summary.

    ``eigenvalues`` are all 16, sorted by |Re| ascending; ``lambda_nn``
    is the nonzero mode with smallest |Re|, ``lambda_nnn`` the next one
    with a distinct real part.
    """

    eigenvalues: np.ndarray = field(repr=False)
    zero_mode_count: int
    lambda_nn: complex
    lambda_nnn: complex
    t_pre_spectral: float

    def __post_init__(self):
        assert self.zero_mode_count >= 1
        assert self.t_pre_spectral > 0


@dataclass(frozen=True)
class SpectrumF:
    """Magnitude spectrum of M_x(t) on a uniform grid.

    ``peak_height`` is the magnitude at the omega = 0 bin.  The sampled
    signal is retained so Parseval's identity can be checked against
    the reported magnitudes.
    """

    frequencies: np.ndarray = field(repr=False)
    magnitude: np.ndarray = field(repr=False)
    peak_height: float
    peak_frequency: float
    sample_times: np.ndarray = field(repr=False)
    samples: np.ndarray = field(repr=False)


def detect_plateau(traj: Trajectory, rel_tol: float = 0.01) -> PlateauReport:
    """Locate the quasi-steady window of M_x and its decay time.

    The empirical t_pre is the first time, at or after the analytic
    transient time, from which M_x varies by less than ``rel_tol``
    (relative to the window mean) over a sliding one-decade window.
    The search never starts before the analytic 1/(kappa^2 tau_c):
    earlier windows only see the not-yet-evolved initial value.  t_th
    is the first later time at which M_x drops below
    mx_final + (mx_pre - mx_final)/e, which recovers t_th = 1/R_n for a
    pure exponential tail; inf when never crossed.
    """
    if traj.params is None:
        raise ValueError("trajectory carries no parameters")
    times = traj.times
    mx = traj.mx
    n = len(times)
    t_ana = t_pre_analytic(traj.params)
    if np.isfinite(t_ana) and times[-1] < 10.0 * t_ana:
        raise InsufficientHorizonError(
            f"grid ends at {times[-1]:.3g} s, below 10x the analytic "
            f"transient time {t_ana:.3g} s"
        )
    search_from = t_ana if np.isfinite(t_ana) else 0.0
    amax = np.abs(mx).max()
    not_found = PlateauReport(
        plateau_found=False,
        t_pre_analytic=t_ana,
        t_pre_empirical=np.nan,
        t_th=np.nan,
        mx_pre=np.nan,
        mx_final=np.nan,
        fractional_lifetime=np.nan,
        rel_tol=rel_tol,
    )
    if amax == 0.0:
        return not_found
    i_final = np.searchsorted(times, times[-1] / 10.0, side="left")
    mx_final = float(np.mean(mx[i_final:]))
    for i in range(n):
        t_i = times[i]
        if t_i <= 0.0 or t_i < search_from:
            continue
        if 10.0 * t_i > times[-1]:
            break
        j = np.searchsorted(times, 10.0 * t_i, side="right")
        window = mx[i:j]
        mean = float(np.mean(window))
        if abs(mean) < 1e-3 * amax:
            continue
        if window.max() - window.min() >= rel_tol * abs(mean):
            continue
        mx_pre = mean
        threshold = mx_final + (mx_pre - mx_final) / np.e
        t_th = np.inf
        later = np.nonzero(mx[i + 1 :] < threshold)[0]
        if len(later):
            t_th = float(times[i + 1 + later[0]])
        return PlateauReport(
            plateau_found=True,
            t_pre_analytic=t_ana,
            t_pre_empirical=float(t_i),
            t_th=t_th,
            mx_pre=mx_pre,
            mx_final=mx_final,
            fractional_lifetime=(t_th - t_i) / t_i,
            rel_tol=rel_tol,
        )
    return not_found


def fractional_lifetime(report: PlateauReport) -> float:
    """(t_th - t_pre)/t_pre; raises when no plateau was found."""
    if not report.plateau_found:
        raise PlateauNotFoundError("no quasi-steady window detected")
    return report.fractional_lifetime


def _eig_sorted(superop: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ev = np.linalg.eigvals(np.asarray(superop, dtype=complex))
    order = np.lexsort((ev.imag, ev.real, np.abs(ev.real)))
    ev = ev[order]
    radius = np.abs(ev).max()
    zero = np.abs(ev) < ZERO_MODE_REL_TOL * radius if radius > 0 else np.ones(len(ev), bool)
    return ev, zero


def zero_mode_count(superop: np.ndarray) -> int:
    """Number of eigenvalues below 1e-9 of the spectral radius."""
    _, zero = _eig_sorted(superop)
    return int(zero.sum())


def spectral_lifetime(superop: np.ndarray) -> SpectralReport:
    """Lifetime 1/|Re lambda_NNN - Re lambda_NN| from the slow spectrum.

    lambda_NN is the nonzero mode with smallest |Re|; lambda_NNN the
    next whose |Re| exceeds it by more than a relative 1e-6.  A missing
    distinct pair raises DegenerateSpectrumError.
    """
    ev, zero = _eig_sorted(superop)
    nonzero = ev[~zero]
    if len(nonzero) == 0:
        raise DegenerateSpectrumError("all eigenvalues are zero modes")
    lam_nn = nonzero[0]
    r_nn = abs(lam_nn.real)
    lam_nnn = None
    for lam in nonzero[1:]:
        if abs(lam.real) > r_nn * (1.0 + GAP_DEGENERACY_REL_TOL):
            lam_nnn = lam
            break
    if lam_nnn is None:
        raise DegenerateSpectrumError(
            "no next-nearest decay rate distinct from the nearest one"
        )
    gap = abs(lam_nnn.real - lam_nn.real)
    return SpectralReport(
        eigenvalues=ev,
        zero_mode_count=int(zero.sum()),
        lambda_nn=complex(lam_nn),
        lambda_nnn=complex(lam_nnn),
        t_pre_spectral=1.0 / gap,
    )


def _is_uniform(times: np.ndarray) -> bool:
    if len(times) < 2:
        return False
    d = np.diff(times)
    return bool(d.min() > 0 and (d.max() - d.min()) <= 1e-9 * d.max())


def fourier_spectrum(traj: Trajectory, n_samples: int = 8192) -> SpectrumF:
    """DFT magnitude of M_x over a rectangular window, mean retained.

    The window is [0, 10 T_th] (clipped to the trajectory end); a
    log-spaced input is resampled to ``n_samples`` uniform points by
    linear interpolation, while an already uniform grid inside the
    window is used as is.  F_k = dt * DFT(x), so the omega = 0 bin is
    the windowed time integral of the signal.
    """
    times = traj.times
    if len(times) < 2:
        raise AnalysisError("trajectory too short for a spectrum")
    t_end = times[-1]
    if traj.params is not None:
        t_th = t_th_analytic(traj.params)
        if np.isfinite(t_th):
            t_end = min(t_end, 10.0 * t_th)
    if _is_uniform(times) and times[-1] <= t_end * (1.0 + 1e-12):
        ts = times
        xs = np.asarray(traj.mx, dtype=float)
    else:
        ts = np.linspace(0.0, t_end, n_samples)
        xs = np.interp(ts, times, traj.mx)
    if len(ts) < 64:
        raise AnalysisError(f"need at least 64 samples, got {len(ts)}")
    dt = ts[1] - ts[0]
    fk = dt * np.fft.fft(xs)
    freqs = 2.0 * np.pi * np.fft.fftfreq(len(ts), d=dt)
    order = np.fft.fftshift(np.arange(len(ts)))
    freqs = freqs[order]
    mag = np.abs(fk)[order]
    zero_bin = int(np.nonzero(freqs == 0.0)[0][0])
    return SpectrumF(
        frequencies=freqs,
        magnitude=mag,
        peak_height=float(mag[zero_bin]),
        peak_frequency=float(freqs[int(np.argmax(mag))]),
        sample_times=ts,
        samples=xs,
    )
