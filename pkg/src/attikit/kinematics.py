"""Quaternion kinematics: rates, accelerations, and Euler-rate mappings.

Angular velocity appears in two frames: body rates w' (components p, q, r in
the rotating frame) and world rates w (components in the fixed frame).  The
core relations are

    qdot = 1/2 q ∘ (0, w')  =  1/2 (0, w) ∘ q  =  1/2 G' w'  =  1/2 E' w

with the 3x4 matrices E, G linear in the quaternion components, satisfying
E E' = G G' = I and E G' = R(q).  (' denotes transpose.)
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .algebra import conjugate, pure, quat_mul, require_unit
from .conversions import to_rotation_matrix
from .errors import (
    GimbalLockError,
    InconsistentRateError,
    InconsistentTrajectoryError,
    NonFiniteInputError,
)

SINGULARITY_THRESHOLD = 1e-8  # |cos theta| below this is treated as gimbal lock
RATE_ORTHOGONALITY_TOLERANCE = 1e-6  # admission tolerance on <q, qdot>


class EGMatrices(NamedTuple):
    E: np.ndarray  # 3x4, world-frame rate map: w = 2 E qdot
    G: np.ndarray  # 3x4, body-frame rate map: w' = 2 G qdot


def _as_vec(v, n: int) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (n,):
        raise ValueError(f"expected {n}-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteInputError(f"non-finite components: {v}")
    return v


def _check_rate_orthogonality(q, qd) -> None:
    dot = abs(float(q @ qd))
    if dot > RATE_ORTHOGONALITY_TOLERANCE:
        raise InconsistentRateError(
            f"<q, qdot> = {dot:.3e} exceeds {RATE_ORTHOGONALITY_TOLERANCE}; "
            "rate is not tangent to the unit sphere"
        )


def eg_matrices(q) -> EGMatrices:
    """The E and G matrices for a unit quaternion."""
    q = require_unit(q)
    q0, q1, q2, q3 = q
    e = np.array(
        [
            [-q1, q0, -q3, q2],
            [-q2, q3, q0, -q1],
            [-q3, -q2, q1, q0],
        ]
    )
    g = np.array(
        [
            [-q1, q0, q3, -q2],
            [-q2, -q3, q0, q1],
            [-q3, q2, -q1, q0],
        ]
    )
    return EGMatrices(e, g)


def _g_of(q4: np.ndarray) -> np.ndarray:
    # G is linear in its quaternion argument; usable on rates too.
    q0, q1, q2, q3 = q4
    return np.array(
        [
            [-q1, q0, q3, -q2],
            [-q2, -q3, q0, q1],
            [-q3, q2, -q1, q0],
        ]
    )


def qdot_from_body_rates(q, w_body) -> np.ndarray:
    """Quaternion rate 1/2 q ∘ (0, w') for body-frame angular velocity."""
    q = require_unit(q)
    w_body = _as_vec(w_body, 3)
    return 0.5 * quat_mul(q, pure(w_body))


def qdot_from_world_rates(q, w_world) -> np.ndarray:
    """Quaternion rate 1/2 (0, w) ∘ q for world-frame angular velocity."""
    q = require_unit(q)
    w_world = _as_vec(w_world, 3)
    return 0.5 * quat_mul(pure(w_world), q)


def body_rates_from_qdot(q, qd) -> np.ndarray:
    """Body angular velocity w' = vector part of 2 conj(q) ∘ qdot."""
    q = require_unit(q)
    qd = _as_vec(qd, 4)
    _check_rate_orthogonality(q, qd)
    return (2.0 * quat_mul(conjugate(q), qd))[1:]


def world_rates_from_qdot(q, qd) -> np.ndarray:
    """World angular velocity w = vector part of 2 qdot ∘ conj(q)."""
    q = require_unit(q)
    qd = _as_vec(qd, 4)
    _check_rate_orthogonality(q, qd)
    return (2.0 * quat_mul(qd, conjugate(q)))[1:]


def body_accel_from_q(q, qd, qdd) -> np.ndarray:
    """Body angular acceleration wdot' = 2 G qdd.

    For a unit-norm trajectory, conj(qd) ∘ qd = (|qd|^2, 0), so the scalar
    part of 2 conj(q) ∘ qdd must equal -2 |qd|^2; violations beyond 1e-6
    mean (q, qd, qdd) are not samples of one trajectory.
    """
    q = require_unit(q)
    qd = _as_vec(qd, 4)
    qdd = _as_vec(qdd, 4)
    scalar = float((2.0 * quat_mul(conjugate(q), qdd))[0])
    if abs(scalar + 2.0 * float(qd @ qd)) > 1e-6:
        raise InconsistentTrajectoryError(
            f"scalar(2 conj(q)∘qdd) = {scalar:.3e} != -2|qd|^2 = {-2.0 * float(qd @ qd):.3e}"
        )
    _, g = eg_matrices(q)
    return 2.0 * (g @ qdd)


def rotation_matrix_rate(q, qd) -> tuple[np.ndarray, np.ndarray]:
    """(Rdot, Omega_body) with Rdot = R Omega' and Omega' = 2 G Gdot^T.

    Omega_body is the skew matrix of the body angular velocity.
    """
    q = require_unit(q)
    qd = _as_vec(qd, 4)
    _check_rate_orthogonality(q, qd)
    _, g = eg_matrices(q)
    omega = 2.0 * (g @ _g_of(qd).T)
    r = to_rotation_matrix(q)
    return r @ omega, omega


# --- 321 (yaw-pitch-roll) Euler rates ---------------------------------------


def euler_321_rate_matrix(phi: float, theta: float) -> np.ndarray:
    """Matrix mapping 321 Euler rates [phidot, thetadot, psidot] to body rates.

    Its determinant is cos(theta); it is singular at theta = ±pi/2.
    """
    sphi, cphi = math.sin(phi), math.cos(phi)
    sth, cth = math.sin(theta), math.cos(theta)
    return np.array(
        [
            [1.0, 0.0, -sth],
            [0.0, cphi, sphi * cth],
            [0.0, -sphi, cphi * cth],
        ]
    )


def body_rates_from_euler_321(phi: float, theta: float, euler_rates) -> np.ndarray:
    """Body rates [p, q, r] from 321 Euler angle rates (total forward map)."""
    er = _as_vec(euler_rates, 3)
    return euler_321_rate_matrix(phi, theta) @ er


def euler_rates_from_body_321(
    phi: float,
    theta: float,
    w_body,
    singularity_threshold: float = SINGULARITY_THRESHOLD,
) -> np.ndarray:
    """321 Euler rates from body rates; raises GimbalLockError near theta = ±pi/2."""
    w = _as_vec(w_body, 3)
    cth = math.cos(theta)
    if abs(cth) <= singularity_threshold:
        raise GimbalLockError(cth)
    sphi, cphi = math.sin(phi), math.cos(phi)
    tth = math.tan(theta)
    m = np.array(
        [
            [1.0, sphi * tth, cphi * tth],
            [0.0, cphi, -sphi],
            [0.0, sphi / cth, cphi / cth],
        ]
    )
    return m @ w


def euler_rate_conditioning(theta: float) -> float:
    """Growth factor 1/|cos theta| of the rate-inversion entries.

    Returns inf exactly at theta = ±pi/2.
    """
    cth = abs(math.cos(theta))
    if cth == 0.0:
        return math.inf
    return 1.0 / cth
