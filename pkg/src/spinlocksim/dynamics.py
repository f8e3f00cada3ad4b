"""Time evolution: full superoperator propagation, reduced observable
systems, and the closed-form transverse-magnetization solution."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm
from scipy.integrate import solve_ivp

from .liouvillian import (
    GeneratorSet,
    SimParams,
    kappa_squared,
    nonsecular_rate,
    omega_d_amplitudes,
    plateau_value,
    t_pre_analytic,
    t_th_analytic,
    thermal_rate,
)
from .operators import devectorize, single_spin_op, two_spin_op, vectorize

__all__ = [
    "NumericalError",
    "ObservableRecord",
    "Trajectory",
    "ReducedStateSec",
    "ReducedStateN",
    "initial_state_x",
    "observables",
    "default_time_grid",
    "evolve_super",
    "evolve_reduced_sec",
    "evolve_reduced_n",
    "analytic_mx",
]

_AXES3 = ("x", "y", "z")


class NumericalError(RuntimeError):
    """Propagation produced non-finite values."""


def initial_state_x() -> np.ndarray:
    """Product state of two +x-polarized spins; M_x = 1."""
    single = 0.5 * single_spin_op("d") + single_spin_op("x")
    return np.kron(single, single)


@dataclass(frozen=True)
class ObservableRecord:
    """Observables of one density operator.

    Single-spin sums M_a = <I_a^1 + I_a^2>; aligned correlations
    M_aa = <I_a I_a>; cross correlations symmetrized,
    M_ab = <I_a I_b> + <I_b I_a> for a != b.
    """

    mx: float
    my: float
    mz: float
    mab: dict
    trace: float
    purity: float
    min_eig: float


def observables(rho: np.ndarray) -> ObservableRecord:
    singles = {}
    for a in _AXES3:
        op = two_spin_op(a, "d") + two_spin_op("d", a)
        singles[a] = np.trace(op @ rho).real
    mab = {}
    for a in _AXES3:
        for b in _AXES3:
            if a == b:
                mab[(a, b)] = np.trace(two_spin_op(a, a) @ rho).real
            else:
                op = two_spin_op(a, b) + two_spin_op(b, a)
                mab[(a, b)] = np.trace(op @ rho).real
    herm = 0.5 * (rho + rho.conj().T)
    eigs = np.linalg.eigvalsh(herm)
    return ObservableRecord(
        mx=singles["x"],
        my=singles["y"],
        mz=singles["z"],
        mab=mab,
        trace=np.trace(rho).real,
        purity=np.trace(rho @ rho).real,
        min_eig=float(eigs.min()),
    )


@dataclass
class Trajectory:
    """Observable time series along one evolution."""

    times: np.ndarray
    mx: np.ndarray
    my: np.ndarray
    mz: np.ndarray
    mab: dict
    trace: np.ndarray
    purity: np.ndarray
    min_eig: np.ndarray
    params: SimParams = field(repr=False, default=None)

    def __post_init__(self):
        if len(self.times) and not np.all(np.diff(self.times) > 0):
            raise ValueError("time grid must be strictly increasing")


def default_time_grid(params: SimParams, n: int = 2000) -> np.ndarray:
    """Log-spaced grid resolving both the fast transient and the slow tail.

    Starts at t = 0, then runs from 1e-3 of the transient time to 10x
    the thermalization time.  Falls back to fixed windows when either
    scale is infinite (zero couplings).
    """
    if n < 2:
        raise ValueError("need at least 2 grid points")
    t_fast = t_pre_analytic(params)
    t_slow = t_th_analytic(params)
    start = 1e-3 * t_fast if np.isfinite(t_fast) else 1e-6
    if np.isfinite(t_slow):
        end = 10.0 * t_slow
    elif np.isfinite(t_fast):
        end = 1e3 * t_fast
    else:
        end = 1.0
    if not end > start:
        end = 1e3 * start
    grid = np.logspace(np.log10(start), np.log10(end), n - 1)
    return np.concatenate(([0.0], grid))


def _record_series(times, states, params) -> Trajectory:
    recs = [observables(rho) for rho in states]
    mab = {
        key: np.array([r.mab[key] for r in recs])
        for key in recs[0].mab
    }
    return Trajectory(
        times=np.asarray(times, dtype=float),
        mx=np.array([r.mx for r in recs]),
        my=np.array([r.my for r in recs]),
        mz=np.array([r.mz for r in recs]),
        mab=mab,
        trace=np.array([r.trace for r in recs]),
        purity=np.array([r.purity for r in recs]),
        min_eig=np.array([r.min_eig for r in recs]),
        params=params,
    )


def evolve_super(
    gen: GeneratorSet,
    rho0: np.ndarray,
    times: np.ndarray,
    method: str = "expm",
) -> Trajectory:
    """Propagate rho0 along the grid under gen.l_total.

    ``expm`` (default) applies the dense matrix exponential stepwise,
    reusing the propagator across equal steps; ``bdf`` cross-checks with
    an implicit adaptive integrator on the real-stacked system.
    """
    times = np.asarray(times, dtype=float)
    if times[0] != 0.0:
        raise ValueError("time grid must start at 0")
    L = gen.l_total
    v0 = vectorize(rho0)
    if method == "expm":
        states = [rho0]
        v = v0.copy()
        prop = None
        last_dt = None
        for dt in np.diff(times):
            if last_dt is None or dt != last_dt:
                prop = expm(L * dt)
                last_dt = dt
            v = prop @ v
            if not np.all(np.isfinite(v)):
                raise NumericalError("propagation diverged (non-finite state)")
            states.append(devectorize(v))
    elif method == "bdf":
        A, B = L.real, L.imag
        jac = np.block([[A, -B], [B, A]])
        y0 = np.concatenate([v0.real, v0.imag])
        sol = solve_ivp(
            lambda t, y: jac @ y,
            (0.0, times[-1]),
            y0,
            method="BDF",
            t_eval=times,
            jac=lambda t, y: jac,
            rtol=1e-10,
            atol=1e-12,
        )
        if not sol.success:
            raise NumericalError(f"adaptive integration failed: {sol.message}")
        ys = sol.y.T
        states = [devectorize(y[:16] + 1j * y[16:]) for y in ys]
    else:
        raise ValueError(f"unknown method {method!r}")
    return _record_series(times, states, gen.params)


@dataclass(frozen=True)
class ReducedStateSec:
    """State of the closed secular observable system (M_x, M_zz, M_yy, M_yz)."""

    m_x: float
    m_zz: float
    m_yy: float
    m_yz: float

    @classmethod
    def initial(cls) -> "ReducedStateSec":
        return cls(1.0, 0.0, 0.0, 0.0)

    def as_vector(self) -> np.ndarray:
        return np.array([self.m_x, self.m_zz, self.m_yy, self.m_yz])


@dataclass(frozen=True)
class ReducedStateN:
    """State of the closed non-secular observable system (M_x, M_zz, M_yy, M_xx)."""

    m_x: float
    m_zz: float
    m_yy: float
    m_xx: float

    @classmethod
    def initial(cls) -> "ReducedStateN":
        return cls(1.0, 0.0, 0.0, 0.25)

    def as_vector(self) -> np.ndarray:
        return np.array([self.m_x, self.m_zz, self.m_yy, self.m_xx])


def _evolve_linear(mat: np.ndarray, v0: np.ndarray, times: np.ndarray) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    out = np.empty((len(times), len(v0)))
    v = v0.copy()
    last_t = times[0]
    out[0] = expm(mat * times[0]) @ v0 if times[0] != 0.0 else v0
    v = out[0]
    for i, t in enumerate(times[1:], start=1):
        v = expm(mat * (t - last_t)) @ v
        out[i] = v
        last_t = t
    return out


def reduced_sec_matrix(params: SimParams) -> np.ndarray:
    """Coefficient matrix of the secular observable system at alpha = 0.

    Columns/rows ordered (M_x, M_zz, M_yy, M_yz).  The M_yz damping rate
    is (4 omega1^2 + (9/4) omega_d^2) tau_c = kappa^2 tau_c.
    """
    w1 = params.omega1
    wd = omega_d_amplitudes(params)[2].real
    tc = params.tau_c
    k2 = kappa_squared(params)
    return np.array(
        [
            [-2.25 * wd**2 * tc, 6.0 * w1 * wd * tc, -6.0 * w1 * wd * tc, -3.0 * wd],
            [0.75 * w1 * wd * tc, -2.0 * w1**2 * tc, 2.0 * w1**2 * tc, w1],
            [-0.75 * w1 * wd * tc, 2.0 * w1**2 * tc, -2.0 * w1**2 * tc, -w1],
            [0.75 * wd, -2.0 * w1, 2.0 * w1, -k2 * tc],
        ]
    )


def reduced_n_matrix(params: SimParams) -> np.ndarray:
    """Coefficient matrix of the non-secular observable system.

    Columns/rows ordered (M_x, M_zz, M_yy, M_xx); M_x decays alone at
    (5/2) p_1 + p_2, and M_zz + M_yy + M_xx is conserved.
    """
    p1 = nonsecular_rate(params, 1)
    p2 = nonsecular_rate(params, 2)
    return np.array(
        [
            [-(2.5 * p1 + p2), 0.0, 0.0, 0.0],
            [0.0, -2.0 * p1, p1, p1],
            [0.0, p1, -(p1 + p2), p2],
            [0.0, p1, p2, -(p1 + p2)],
        ]
    )


def evolve_reduced_sec(
    params: SimParams, init: ReducedStateSec, times: np.ndarray
) -> np.ndarray:
    """Integrate the secular observable system; rows follow the grid.

    Only valid at alpha = 0 (the closed four-variable system exists
    there); nonzero alpha is rejected.
    """
    if params.alpha != 0.0:
        raise ValueError("reduced secular system requires alpha = 0")
    return _evolve_linear(reduced_sec_matrix(params), init.as_vector(), times)


def evolve_reduced_n(
    params: SimParams, init: ReducedStateN, times: np.ndarray
) -> np.ndarray:
    """Integrate the non-secular observable system; rows follow the grid."""
    return _evolve_linear(reduced_n_matrix(params), init.as_vector(), times)


def analytic_mx(params: SimParams, t, mx0: float = 1.0):
    """Closed-form M_x(t) for the resonant spin lock at alpha = 0.

    M_x(t) = mx0 [4 w1^2/k^2 + (9 wd^2 / 4 k^2) cos(k t) e^{-k^2 tau_c t}]
    e^{-R_n t} with k^2 = 4 w1^2 + 9 wd^2/4 and R_n = (5/2) p_1 + p_2.
    """
    if params.alpha != 0.0:
        raise ValueError("closed-form M_x holds only at alpha = 0")
    t = np.asarray(t, dtype=float)
    k2 = kappa_squared(params)
    if k2 == 0.0:
        return mx0 * np.ones_like(t) * np.exp(-thermal_rate(params) * t)
    kappa = np.sqrt(k2)
    wd0 = omega_d_amplitudes(params)[2].real
    transient = (2.25 * wd0**2 / k2) * np.cos(kappa * t) * np.exp(-k2 * params.tau_c * t)
    return mx0 * (plateau_value(params) + transient) * np.exp(-thermal_rate(params) * t)
