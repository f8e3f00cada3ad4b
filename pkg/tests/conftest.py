import numpy as np
import pytest

from spinlocksim import SimParams, Trajectory

TWO_PI = 2.0 * np.pi


@pytest.fixture
def fig1_params() -> SimParams:
    """Matched resonant lock: omega1 = omega_d = 2 pi x 5 kHz."""
    return SimParams(
        omega0=TWO_PI * 1e7,
        omega1=TWO_PI * 5e3,
        omega_d=TWO_PI * 5e3,
        tau_c=1e-6,
    )


def make_traj(times, mx, params=None) -> Trajectory:
    """Synthetic trajectory carrying only the M_x channel."""
    times = np.asarray(times, dtype=float)
    mx = np.asarray(mx, dtype=float)
    zeros = np.zeros_like(mx)
    mab = {(a, b): zeros for a in "xyz" for b in "xyz"}
    return Trajectory(
        times=times,
        mx=mx,
        my=zeros,
        mz=zeros,
        mab=mab,
        trace=np.ones_like(mx),
        purity=np.ones_like(mx),
        min_eig=zeros,
        params=params,
    )
