import numpy as np
import pytest

from attikit import (
    NonUnitQuaternionError,
    body_rate_to_desired_frame,
    canonicalize,
    conjugate,
    desired_rate_to_body_frame,
    error_matrix,
    error_quaternion,
    error_quaternion_rate,
    propagate_quaternion,
    pure,
    quat_mul,
    rotate_vector,
    to_rotation_matrix,
    RateProfile,
)
from conftest import random_unit_quats

IDENTITY = np.array([1.0, 0.0, 0.0, 0.0])


class TestErrorQuaternion:
    def test_zero_error(self, rng):
        for q in random_unit_quats(rng, 20):
            assert np.max(np.abs(error_quaternion(q, q) - IDENTITY)) < 1e-14

    def test_identity_desired(self, rng):
        for q in random_unit_quats(rng, 20):
            assert np.array_equal(error_quaternion(IDENTITY, q), canonicalize(q))

    def test_definition_identity(self, rng):
        for qs in random_unit_quats(rng, 10_000).reshape(-1, 2, 4):
            q_d, q = qs
            q_e = error_quaternion(q_d, q)
            recomposed = quat_mul(q_d, q_e)
            err = min(
                np.max(np.abs(recomposed - q)),
                np.max(np.abs(recomposed + q)),
            )
            assert err < 1e-12

    def test_maps_body_to_desired_frame(self, rng):
        for qs in random_unit_quats(rng, 200).reshape(-1, 2, 4):
            q_d, q = qs
            q_e = error_quaternion(q_d, q)
            v = rng.normal(size=3)
            chained = rotate_vector(q_d, rotate_vector(q_e, v))
            assert np.max(np.abs(chained - rotate_vector(q, v))) < 1e-12

    def test_result_canonical(self, rng):
        for qs in random_unit_quats(rng, 100).reshape(-1, 2, 4):
            q_e = error_quaternion(qs[0], qs[1])
            assert np.array_equal(q_e, canonicalize(q_e))

    def test_rejects_non_unit(self):
        with pytest.raises(NonUnitQuaternionError):
            error_quaternion([2.0, 0, 0, 0], IDENTITY)


class TestErrorMatrix:
    def test_zero_error(self, rng):
        r = to_rotation_matrix(random_unit_quats(rng, 1)[0])
        assert np.max(np.abs(error_matrix(r, r) - np.eye(3))) < 1e-14

    def test_identity_desired(self, rng):
        r = to_rotation_matrix(random_unit_quats(rng, 1)[0])
        assert np.array_equal(error_matrix(np.eye(3), r), r)

    def test_consistent_with_quaternion_form(self, rng):
        for qs in random_unit_quats(rng, 200).reshape(-1, 2, 4):
            q_d, q = qs
            via_quat = to_rotation_matrix(error_quaternion(q_d, q))
            via_matrix = error_matrix(to_rotation_matrix(q_d), to_rotation_matrix(q))
            assert np.max(np.abs(via_quat - via_matrix)) < 1e-12

    def test_recomposition(self, rng):
        for qs in random_unit_quats(rng, 100).reshape(-1, 2, 4):
            r_d = to_rotation_matrix(qs[0])
            r = to_rotation_matrix(qs[1])
            assert np.max(np.abs(r_d @ error_matrix(r_d, r) - r)) < 1e-12


class TestFrameTransport:
    def test_identity_error_unchanged(self, rng):
        w = rng.normal(size=3)
        assert np.array_equal(desired_rate_to_body_frame(IDENTITY, w), w)

    def test_norm_preserved(self, rng):
        for q_e in random_unit_quats(rng, 100):
            w = rng.normal(size=3)
            out = desired_rate_to_body_frame(q_e, w)
            assert np.linalg.norm(out) == pytest.approx(np.linalg.norm(w), rel=1e-13)

    def test_round_trip(self, rng):
        for q_e in random_unit_quats(rng, 100):
            w = rng.normal(size=3)
            back = body_rate_to_desired_frame(q_e, desired_rate_to_body_frame(q_e, w))
            assert np.max(np.abs(back - w)) < 1e-13


class TestErrorRate:
    def test_matched_rates_stationary(self, rng):
        for q_e in random_unit_quats(rng, 20):
            w = rng.normal(size=3)
            assert np.array_equal(error_quaternion_rate(q_e, w, w), np.zeros(4))

    def test_identity_error_unit_z_mismatch(self):
        qd = error_quaternion_rate(IDENTITY, [0, 0, 1], [0, 0, 0])
        assert np.array_equal(qd, [0, 0, 0, 0.5])

    def test_intermediate_form_consistency(self, rng):
        # 1/2 (q_e ∘ w_body - w_des_in_desired ∘ q_e) must equal the
        # transported form 1/2 q_e ∘ (w_body - w_des_in_body).
        for qs in random_unit_quats(rng, 10_000).reshape(-1, 2, 4):
            q_d, q = qs
            q_e = error_quaternion(q_d, q)
            w_body = rng.normal(size=3)
            w_des_body = rng.normal(size=3)
            w_des_desired = body_rate_to_desired_frame(q_e, w_des_body)
            lhs = 0.5 * (quat_mul(q_e, pure(w_body)) - quat_mul(pure(w_des_desired), q_e))
            rhs = error_quaternion_rate(q_e, w_body, w_des_body)
            assert np.max(np.abs(lhs - rhs)) < 1e-13

    def test_matches_finite_difference_of_coupled_trajectories(self, rng):
        # Propagate q and q_d under constant body rates, numerically
        # differentiate the (uncanonicalized) error quaternion, and compare
        # against the analytic rate with the desired rate transported to the
        # body frame.
        h = 1e-5
        q0 = random_unit_quats(rng, 2)
        w_body = np.array([0.3, -0.4, 0.6])
        w_des = np.array([-0.2, 0.5, 0.1])
        qs = propagate_quaternion(q0[0], RateProfile.constant(w_body), h, 0.11, method="expmap")
        qds = propagate_quaternion(q0[1], RateProfile.constant(w_des), h, 0.11, method="expmap")

        def raw_error(i):
            return quat_mul(conjugate(qds[i].q), qs[i].q)

        for i in (5, 1000, 10_000):
            q_e = raw_error(i)
            # w_des is constant in the desired body frame; transport to body.
            w_des_body = desired_rate_to_body_frame(q_e, w_des)
            analytic = 0.5 * quat_mul(q_e, pure(w_body - w_des_body))
            fd = (raw_error(i + 1) - raw_error(i - 1)) / (2 * h)
            assert np.max(np.abs(analytic - fd)) < 1e-5
