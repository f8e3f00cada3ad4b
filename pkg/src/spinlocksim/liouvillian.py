"""Generators of the dissipative two-spin dynamics under spin locking.

Three 16x16 generators act on the vectorized density operator: the
secular part (coherent rotating-frame Hamiltonian plus its fluctuation
damping), the non-secular dipolar dissipator, and the system-bath
relaxation channel.  Each can be toggled independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .operators import (
    collective_op,
    commutator_superop,
    dissipator_superop,
    double_commutator_superop,
    spherical_tensor,
    two_spin_op,
)

__all__ = [
    "SimParams",
    "GeneratorSet",
    "omega_d_amplitudes",
    "kappa_squared",
    "nonsecular_rate",
    "thermal_rate",
    "plateau_value",
    "t_pre_analytic",
    "t_th_analytic",
    "transition_rates",
    "build_h_sec",
    "build_L_sec",
    "build_L_n",
    "build_L_sl",
    "build_total",
]


@dataclass(frozen=True)
class SimParams:
    """Physical parameters of one simulation.

    Frequencies are angular (rad/s), times in seconds.  ``omega_d``
    is either a scalar dipolar amplitude (expanded to the five orders
    m = -2..2 as (wd, -wd, wd, wd, wd), which satisfies the reality
    condition) or an explicit length-5 complex sequence; the m = 0
    entry must be real since it enters the Hamiltonian.
    """

    omega0: float
    omega1: float
    omega_d: float | tuple = 0.0
    alpha: float = 0.0
    tau_c: float = 1e-6
    omega_sl: float = 0.0
    omega_L: float = 0.0
    m_th: float = 0.0
    include_nonsecular: bool = True
    include_system_bath: bool = False

    def __post_init__(self):
        if not self.tau_c > 0:
            raise ValueError("tau_c must be positive")
        if not self.omega0 > 0:
            raise ValueError("omega0 must be positive")
        if not -1.0 <= self.m_th <= 1.0:
            raise ValueError("m_th must lie in [-1, 1]")
        if not np.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        wd = self.omega_d
        if np.isscalar(wd):
            if not np.isfinite(wd) or np.iscomplexobj(np.asarray(wd)):
                raise ValueError("scalar omega_d must be a finite real number")
        else:
            amps = np.asarray(wd, dtype=complex)
            if amps.shape != (5,):
                raise ValueError("omega_d must be scalar or a length-5 sequence")
            scale = max(np.abs(amps).max(), 1.0)
            if abs(amps[2].imag) > 1e-12 * scale:
                raise ValueError("the m=0 dipolar amplitude must be real")
            object.__setattr__(self, "omega_d", tuple(complex(a) for a in amps))

    def with_(self, **kw) -> "SimParams":
        return replace(self, **kw)


@dataclass(frozen=True)
class GeneratorSet:
    """The assembled 16x16 generators; ``l_total`` sums the enabled parts."""

    l_sec: np.ndarray
    l_n: np.ndarray
    l_sl: np.ndarray
    l_total: np.ndarray
    params: SimParams = field(repr=False)


def omega_d_amplitudes(params: SimParams) -> np.ndarray:
    """Five dipolar amplitudes indexed m = -2..2 (array index m+2)."""
    wd = params.omega_d
    if np.isscalar(wd):
        w = float(wd)
        return np.array([w, -w, w, w, w], dtype=complex)
    return np.asarray(wd, dtype=complex)


def kappa_squared(params: SimParams) -> float:
    """kappa^2 = 4 omega1^2 + (9/4) omega_{d,0}^2, the transient scale."""
    wd0 = omega_d_amplitudes(params)[2].real
    return 4.0 * params.omega1**2 + 2.25 * wd0**2


def _z_factor(m: int, params: SimParams) -> float:
    return 1.0 / (1.0 + (m * params.omega0 * params.tau_c) ** 2)


def nonsecular_rate(params: SimParams, m: int) -> float:
    """p_m = |omega_{d,m}|^2 tau_c / (1 + (m omega0 tau_c)^2)."""
    if m not in (-2, -1, 1, 2):
        raise ValueError("nonsecular order m must be in {-2,-1,1,2}")
    amp = omega_d_amplitudes(params)[m + 2]
    return float(abs(amp) ** 2 * params.tau_c * _z_factor(m, params))


def thermal_rate(params: SimParams) -> float:
    """Slow decay rate of M_x: R_n = (5/2) p_1 + p_2."""
    return 2.5 * nonsecular_rate(params, 1) + nonsecular_rate(params, 2)


def plateau_value(params: SimParams) -> float:
    """Quasi-steady transverse magnetization 4 omega1^2 / kappa^2."""
    k2 = kappa_squared(params)
    if k2 == 0.0:
        return 1.0
    return 4.0 * params.omega1**2 / k2


def t_pre_analytic(params: SimParams) -> float:
    """Transient damping time 1/(kappa^2 tau_c); inf when kappa = 0."""
    k2t = kappa_squared(params) * params.tau_c
    return 1.0 / k2t if k2t > 0 else np.inf


def t_th_analytic(params: SimParams) -> float:
    """Thermalization time 1/R_n; inf when the non-secular rates vanish."""
    rn = thermal_rate(params)
    return 1.0 / rn if rn > 0 else np.inf


def transition_rates(params: SimParams) -> tuple[float, float]:
    """(P_minus, P_plus): downward/upward system-bath transition rates.

    P_+- = omega_sl^2 tau_c (1 +- m_th) / (1 + Delta^2 tau_c^2) with
    Delta = omega_L - omega0; 1/T1 = P_+ + P_-.
    """
    delta = params.omega_L - params.omega0
    base = params.omega_sl**2 * params.tau_c / (1.0 + (delta * params.tau_c) ** 2)
    return base * (1.0 - params.m_th), base * (1.0 + params.m_th)


def build_h_sec(params: SimParams) -> np.ndarray:
    """Secular rotating-frame Hamiltonian (rad/s).

    omega1 (I_x1 + I_x2) + omega_{d,0} (3 I_z1 I_z2 - I1.I2)
    + alpha (I_z1 + I_z2).  The dipolar operator equals sqrt(6) T_2^0;
    this scale is what closes the reduced observable equations with the
    coefficient 9/4 in kappa^2.
    """
    wd0 = omega_d_amplitudes(params)[2].real
    h = params.omega1 * collective_op("x")
    h = h + wd0 * np.sqrt(6.0) * spherical_tensor(0)
    h = h + params.alpha * collective_op("z")
    return h


def build_L_sec(params: SimParams) -> np.ndarray:
    """Secular generator -i[H_sec, .] - tau_c [H_sec, [H_sec, .]]."""
    h = build_h_sec(params)
    return commutator_superop(h) + params.tau_c * double_commutator_superop(h)


def build_L_n(params: SimParams) -> np.ndarray:
    """Non-secular dipolar dissipator.

    Sum over m in {-2,-1,1,2} of |omega_{d,m}|^2 tau_c Z(m) times the
    contractive dissipator 2 A_m rho A_m^dag - {A_m^dag A_m, rho} with
    A_m = 2 T_2^m, Z(m) = 1/(1 + (m omega0 tau_c)^2).  The operator
    scale 2 T_2^m together with these rates yields the M_x decay rate
    (5/2) p_1 + p_2.
    """
    L = np.zeros((16, 16), dtype=complex)
    amps = omega_d_amplitudes(params)
    for m in (-2, -1, 1, 2):
        amp = amps[m + 2]
        if amp == 0:
            continue
        rate = abs(amp) ** 2 * params.tau_c * _z_factor(m, params)
        a = 2.0 * spherical_tensor(m)
        L += rate * dissipator_superop(a, a.conj().T)
    return L


def build_L_sl(params: SimParams) -> np.ndarray:
    """System-bath relaxation channel, acting on each spin separately.

    P_- 2I_- rho I_+ - {I_+ I_-, rho} plus the upward counterpart,
    summed over the two spins.
    """
    p_minus, p_plus = transition_rates(params)
    L = np.zeros((16, 16), dtype=complex)
    if p_minus == 0.0 and p_plus == 0.0:
        return L
    for ops in (("+", "d"), ("d", "+")):
        raise_op = two_spin_op(*ops)
        lower_op = raise_op.conj().T
        L += p_minus * dissipator_superop(lower_op, raise_op)
        L += p_plus * dissipator_superop(raise_op, lower_op)
    return L


def build_total(params: SimParams) -> GeneratorSet:
    """Assemble all generators; disabled toggles contribute zero maps."""
    l_sec = build_L_sec(params)
    l_n = (
        build_L_n(params)
        if params.include_nonsecular
        else np.zeros((16, 16), dtype=complex)
    )
    l_sl = (
        build_L_sl(params)
        if params.include_system_bath
        else np.zeros((16, 16), dtype=complex)
    )
    return GeneratorSet(
        l_sec=l_sec, l_n=l_n, l_sl=l_sl, l_total=l_sec + l_n + l_sl, params=params
    )
