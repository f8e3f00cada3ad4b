"""Two-spin operator algebra and Liouville-space vectorization.

All Hilbert-space operators are dense complex matrices: 2x2 for a single
spin-1/2, 4x4 for the pair.  Superoperators are 16x16 matrices acting on
column-major vectorized density operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HILBERT_DIM = 4
LIOUVILLE_DIM = 16

_AXES = ("x", "y", "z", "+", "-", "d")

_SINGLE = {
    "x": np.array([[0.0, 0.5], [0.5, 0.0]], dtype=complex),
    "y": np.array([[0.0, -0.5j], [0.5j, 0.0]], dtype=complex),
    "z": np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex),
    "d": np.eye(2, dtype=complex),
}
_SINGLE["+"] = _SINGLE["x"] + 1j * _SINGLE["y"]
_SINGLE["-"] = _SINGLE["x"] - 1j * _SINGLE["y"]


def single_spin_op(axis: str) -> np.ndarray:
    """Single spin-1/2 operator.

    ``x``, ``y``, ``z`` give sigma_axis/2, ``+``/``-`` the ladder
    operators I_x +/- i I_y, and ``d`` the 2x2 identity.
    """
    if axis not in _AXES:
        raise ValueError(f"unknown axis {axis!r}; expected one of {_AXES}")
    return _SINGLE[axis].copy()


def two_spin_op(axis1: str, axis2: str) -> np.ndarray:
    """Kronecker product I_axis1 (x) I_axis2 on the two-spin space."""
    return np.kron(single_spin_op(axis1), single_spin_op(axis2))


def collective_op(axis: str) -> np.ndarray:
    """Sum operator I_axis^1 + I_axis^2."""
    return two_spin_op(axis, "d") + two_spin_op("d", axis)


def _dot_product_op() -> np.ndarray:
    return sum(two_spin_op(a, a) for a in ("x", "y", "z"))


def spherical_tensor(m: int) -> np.ndarray:
    """Rank-2 irreducible spherical tensor T_2^m for the spin pair.

    Normalization: T_2^0 = (1/sqrt 6)(3 I_z1 I_z2 - I1.I2),
    T_2^{+-1} = -+ (1/2)(I_z1 I_{+-2} + I_{+-1} I_z2),
    T_2^{+-2} = (1/2) I_{+-1} I_{+-2}.  This family satisfies
    [I_z1 + I_z2, T_2^m] = m T_2^m and (T_2^m)^dag = (-1)^m T_2^{-m}.
    """
    if m not in (-2, -1, 0, 1, 2):
        raise ValueError(f"tensor order m={m} outside [-2, 2]")
    if m == 0:
        return (3.0 * two_spin_op("z", "z") - _dot_product_op()) / np.sqrt(6.0)
    if m == 1:
        return -0.5 * (two_spin_op("z", "+") + two_spin_op("+", "z"))
    if m == -1:
        return +0.5 * (two_spin_op("z", "-") + two_spin_op("-", "z"))
    if m == 2:
        return 0.5 * two_spin_op("+", "+")
    return 0.5 * two_spin_op("-", "-")


@dataclass(frozen=True)
class DipolarGeometry:
    """Internuclear geometry determining the five dipolar amplitudes.

    ``prefactor`` carries the dimensional coupling constant
    (rad/s times length cubed); ``r`` uses the same length unit.
    """

    r: float
    theta: float
    phi: float
    prefactor: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("internuclear distance r must be positive")
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not 0.0 <= self.phi < 2.0 * np.pi:
            raise ValueError("phi must lie in [0, 2*pi)")


def _sph_harm_2(m: int, theta: float, phi: float) -> complex:
    # Explicit rank-2 spherical harmonics; avoids scipy API churn for
    # five fixed formulas.
    ct, st = np.cos(theta), np.sin(theta)
    if m == 0:
        return np.sqrt(5.0 / np.pi) / 4.0 * (3.0 * ct**2 - 1.0)
    if abs(m) == 1:
        val = np.sqrt(15.0 / (2.0 * np.pi)) / 2.0 * st * ct
        return -val * np.exp(1j * phi) if m == 1 else val * np.exp(-1j * phi)
    val = np.sqrt(15.0 / (2.0 * np.pi)) / 4.0 * st**2
    return val * np.exp(2j * m / abs(m) * phi)


def dipolar_amplitudes(geom: DipolarGeometry) -> np.ndarray:
    """Five coupling amplitudes omega_{d,m}, m = -2..2, in rad/s.

    omega_{d,m} = prefactor * Y_2^{-m}(theta, phi) / r^3, so that the
    reality condition omega_{d,-m} = (-1)^m conj(omega_{d,m}) holds.
    """
    scale = geom.prefactor / geom.r**3
    return np.array(
        [scale * _sph_harm_2(-m, geom.theta, geom.phi) for m in range(-2, 3)],
        dtype=complex,
    )


def vectorize(op: np.ndarray) -> np.ndarray:
    """Column-major stacking of a 4x4 operator into a length-16 vector."""
    if op.shape != (HILBERT_DIM, HILBERT_DIM):
        raise ValueError(f"expected {HILBERT_DIM}x{HILBERT_DIM} operator, got {op.shape}")
    return np.asarray(op, dtype=complex).flatten(order="F")


def devectorize(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vectorize`."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (LIOUVILLE_DIM,):
        raise ValueError(f"expected length-{LIOUVILLE_DIM} vector, got {v.shape}")
    return v.reshape(HILBERT_DIM, HILBERT_DIM, order="F")


def left_mul_superop(a: np.ndarray) -> np.ndarray:
    """Superoperator for rho -> A rho under column-major vectorization."""
    return np.kron(np.eye(HILBERT_DIM), a)


def right_mul_superop(b: np.ndarray) -> np.ndarray:
    """Superoperator for rho -> rho B under column-major vectorization."""
    return np.kron(np.asarray(b).T, np.eye(HILBERT_DIM))


def commutator_superop(h: np.ndarray) -> np.ndarray:
    """Coherent generator -i[H, .] as a 16x16 map."""
    return -1j * (left_mul_superop(h) - right_mul_superop(h))


def double_commutator_superop(h: np.ndarray) -> np.ndarray:
    """Damping generator -[H, [H, .]] as a 16x16 map.

    Equals commutator_superop(h) applied twice: (-i[H,.])^2 = -[H,[H,.]].
    """
    c = commutator_superop(h)
    return c @ c


def dissipator_superop(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Relaxation term rho -> 2 A rho B - {B A, rho} as a 16x16 map."""
    ba = np.asarray(b) @ np.asarray(a)
    return (
        2.0 * right_mul_superop(b) @ left_mul_superop(a)
        - left_mul_superop(ba)
        - right_mul_superop(ba)
    )


def observable_basis() -> dict[tuple[str, str], np.ndarray]:
    """The 16 products I_a (x) I_b, a, b in {x, y, z, d}.

    Mutually orthogonal under the Hilbert-Schmidt inner product; any 4x4
    operator decomposes exactly over this basis.
    """
    axes = ("x", "y", "z", "d")
    return {(a, b): two_spin_op(a, b) for a in axes for b in axes}


def hs_coefficients(rho: np.ndarray) -> dict[tuple[str, str], complex]:
    """Expansion coefficients of rho over :func:`observable_basis`."""
    out = {}
    for key, op in observable_basis().items():
        norm = np.trace(op.conj().T @ op).real
        out[key] = complex(np.trace(op.conj().T @ rho)) / norm
    return out
