"""Attitude-error quaternion and its first-order dynamics.

The error quaternion q_e = inverse(q_d) ∘ q rotates vectors from the body
frame to the desired frame, so q = q_d ∘ q_e.  With the angular velocity
error expressed in the body frame, its kinematics reduce to the familiar
form qdot_e = 1/2 q_e ∘ (0, w_body - w_desired_body).
"""

from __future__ import annotations

import numpy as np

from .algebra import canonicalize, conjugate, pure, quat_mul, require_unit
from .conversions import (
    require_rotation_matrix,
    rotate_vector,
    rotate_vector_inverse,
)


def error_quaternion(q_d, q) -> np.ndarray:
    """Canonicalized relative rotation inverse(q_d) ∘ q (body to desired frame)."""
    q_d = require_unit(q_d)
    q = require_unit(q)
    return canonicalize(quat_mul(conjugate(q_d), q))


def error_matrix(r_d, r) -> np.ndarray:
    """Relative rotation matrix inverse(R_d) R, so R_d @ result = R."""
    r_d = require_rotation_matrix(r_d)
    r = require_rotation_matrix(r)
    return r_d.T @ r


def error_quaternion_rate(q_e, w_body, w_des_body) -> np.ndarray:
    """qdot_e = 1/2 q_e ∘ (0, w_body - w_des_body).

    Both rates are in the body frame; q_e = identity with matching rates is
    an exact fixed point.
    """
    q_e = require_unit(q_e)
    w_tilde = np.asarray(w_body, dtype=float) - np.asarray(w_des_body, dtype=float)
    return 0.5 * quat_mul(q_e, pure(w_tilde))


def desired_rate_to_body_frame(q_e, w_des_in_desired) -> np.ndarray:
    """Transport a desired-frame angular velocity into the body frame.

    Inverse of ``body_rate_to_desired_frame``; norm-preserving.
    """
    q_e = require_unit(q_e)
    return rotate_vector_inverse(q_e, w_des_in_desired)


def body_rate_to_desired_frame(q_e, w_in_body) -> np.ndarray:
    """Transport a body-frame angular velocity into the desired frame."""
    q_e = require_unit(q_e)
    return rotate_vector(q_e, w_in_body)
