"""Plateau detection, spectral-gap lifetimes, and Fourier peaks."""

import numpy as np
import pytest
from conftest import make_traj
from hypothesis import given, settings
from hypothesis import strategies as st

from spinlocksim.analysis import (
    AnalysisError,
    DegenerateSpectrumError,
    InsufficientHorizonError,
    PlateauNotFoundError,
    detect_plateau,
    fourier_spectrum,
    fractional_lifetime,
    spectral_lifetime,
    zero_mode_count,
)
from spinlocksim.dynamics import default_time_grid, evolve_super, initial_state_x
from spinlocksim.liouvillian import (
    SimParams,
    build_L_sec,
    build_total,
    t_pre_analytic,
    t_th_analytic,
)

TWO_PI = 2.0 * np.pi


def run_traj(params: SimParams, n: int = 2000):
    return evolve_super(
        build_total(params), initial_state_x(), default_time_grid(params, n)
    )


class TestDetectPlateau:
    def test_requires_parameters(self):
        traj = make_traj(np.linspace(0, 1, 100), np.ones(100))
        with pytest.raises(ValueError, match="parameters"):
            detect_plateau(traj)

    def test_constant_signal(self):
        free = SimParams(omega0=1.0, omega1=0.0, omega_d=0.0, tau_c=1.0)
        traj = make_traj(np.linspace(0, 10, 1001), np.full(1001, 0.5), params=free)
        rep = detect_plateau(traj)
        assert rep.plateau_found
        assert rep.mx_pre == pytest.approx(0.5, abs=1e-12)
        assert np.isinf(rep.t_th)
        assert np.isinf(rep.fractional_lifetime)
        assert fractional_lifetime(rep) == rep.fractional_lifetime

    def test_zero_signal_not_found(self):
        free = SimParams(omega0=1.0, omega1=0.0, omega_d=0.0, tau_c=1.0)
        traj = make_traj(np.linspace(0, 10, 1001), np.zeros(1001), params=free)
        rep = detect_plateau(traj)
        assert not rep.plateau_found
        with pytest.raises(PlateauNotFoundError):
            fractional_lifetime(rep)

    def test_matched_lock(self, fig1_params):
        rep = detect_plateau(run_traj(fig1_params))
        assert rep.plateau_found
        assert rep.mx_pre == pytest.approx(0.64, rel=0.01)
        assert rep.t_th == pytest.approx(t_th_analytic(fig1_params), rel=0.10)
        assert rep.t_pre_empirical >= rep.t_pre_analytic
        assert rep.fractional_lifetime > 1e3

    def test_stable_under_grid_refinement(self, fig1_params):
        coarse = detect_plateau(run_traj(fig1_params, 1000))
        fine = detect_plateau(run_traj(fig1_params, 2000))
        assert abs(coarse.mx_pre - fine.mx_pre) < 0.05 * abs(fine.mx_pre)
        assert (
            abs(coarse.fractional_lifetime - fine.fractional_lifetime)
            < 0.05 * fine.fractional_lifetime
        )

    def test_short_correlation_no_plateau(self, fig1_params):
        # omega0 tau_c < 1: the non-secular channel destroys the signal
        # before any decade-wide window can stay flat
        rep = detect_plateau(run_traj(fig1_params.with_(tau_c=1e-8)))
        assert not rep.plateau_found

    def test_insufficient_horizon(self, fig1_params):
        times = np.linspace(0.0, 5.0 * t_pre_analytic(fig1_params), 200)
        traj = make_traj(times, np.ones(200), params=fig1_params)
        with pytest.raises(InsufficientHorizonError):
            detect_plateau(traj)


class TestSpectralLifetime:
    def test_synthetic_diagonal(self):
        rep = spectral_lifetime(np.diag([0.0, -1e-12, -1.0, -1.5, -4.0]))
        assert rep.zero_mode_count == 2
        assert rep.lambda_nn == pytest.approx(-1.0)
        assert rep.lambda_nnn == pytest.approx(-1.5)
        assert rep.t_pre_spectral == pytest.approx(2.0, rel=1e-12)

    def test_complex_pair_skipped(self):
        rep = spectral_lifetime(np.diag([0.0, -1.0 + 2.0j, -1.0 - 2.0j, -3.0]))
        assert rep.zero_mode_count == 1
        assert rep.lambda_nn.real == pytest.approx(-1.0)
        assert rep.lambda_nnn == pytest.approx(-3.0)
        assert rep.t_pre_spectral == pytest.approx(0.5, rel=1e-12)

    def test_degenerate_slow_pair(self):
        with pytest.raises(DegenerateSpectrumError):
            spectral_lifetime(np.diag([0.0, -1.0, -1.0, -1.0 * (1 + 1e-7)]))

    def test_all_zero(self):
        with pytest.raises(DegenerateSpectrumError):
            spectral_lifetime(np.zeros((4, 4)))

    def test_zero_mode_count_matched_lock(self, fig1_params):
        assert zero_mode_count(build_L_sec(fig1_params)) == 4
        assert zero_mode_count(build_total(fig1_params).l_total) == 2

    def test_matched_lock_gap(self, fig1_params):
        rep = spectral_lifetime(build_total(fig1_params).l_total)
        assert rep.zero_mode_count == 2
        assert rep.t_pre_spectral == pytest.approx(3.5141663719132175, rel=1e-6)

    def test_gap_lifetime_directions(self, fig1_params):
        base = spectral_lifetime(build_total(fig1_params).l_total).t_pre_spectral
        slower_bath = spectral_lifetime(
            build_total(fig1_params.with_(tau_c=2e-6)).l_total
        ).t_pre_spectral
        shifted = spectral_lifetime(
            build_total(
                fig1_params.with_(alpha=0.25 * fig1_params.omega_d)
            ).l_total
        ).t_pre_spectral
        assert slower_bath > base
        assert shifted < base


class TestFourierSpectrum:
    def test_uniform_cosine_peak(self):
        # 32 whole cycles over the N*dt window puts the tone on an exact bin
        times = np.arange(4096) / 4096.0
        w0 = TWO_PI * 32.0
        traj = make_traj(times, np.cos(w0 * times))
        spec = fourier_spectrum(traj)
        assert len(spec.sample_times) == 4096
        assert abs(spec.peak_frequency) == pytest.approx(w0, rel=1e-9)

    def test_constant_signal_zero_peak(self):
        times = np.linspace(0.0, 1.0, 128)
        traj = make_traj(times, np.full(128, 0.7))
        spec = fourier_spectrum(traj)
        dt = times[1] - times[0]
        assert spec.peak_frequency == 0.0
        assert spec.peak_height == pytest.approx(0.7 * 128 * dt, rel=1e-12)

    @given(seed=st.integers(0, 2**31))
    @settings(max_examples=25, deadline=None)
    def test_parseval(self, seed):
        rng = np.random.default_rng(seed)
        times = np.linspace(0.0, 1.0, 128)
        traj = make_traj(times, rng.uniform(-1.0, 1.0, 128))
        spec = fourier_spectrum(traj)
        dt = spec.sample_times[1] - spec.sample_times[0]
        lhs = np.sum(spec.magnitude**2)
        rhs = len(spec.samples) * dt**2 * np.sum(spec.samples**2)
        assert lhs == pytest.approx(rhs, rel=1e-8)

    def test_log_grid_resampled(self, fig1_params):
        spec = fourier_spectrum(run_traj(fig1_params))
        assert len(spec.sample_times) == 8192
        d = np.diff(spec.sample_times)
        assert d.max() - d.min() < 1e-9 * d.max()
        assert spec.sample_times[-1] == pytest.approx(
            10.0 * t_th_analytic(fig1_params), rel=1e-9
        )
        # spin-locked decay is monotone after the transient: peak sits at 0
        assert spec.peak_frequency == 0.0

    def test_rejects_tiny_inputs(self):
        with pytest.raises(AnalysisError, match="too short"):
            fourier_spectrum(make_traj([0.0], [1.0]))
        with pytest.raises(AnalysisError, match="64 samples"):
            fourier_spectrum(make_traj(np.linspace(0, 1, 32), np.ones(32)))
