"""Walk through the core quaternion conventions with worked numbers.

Shows the Hamilton product, local vs. global composition of two rotations,
vector rotation in both directions, and the round trip through the JPL
(scalar-last) convention.
"""

import numpy as np

from attikit import (
    from_axis_angle,
    hamilton_to_jpl,
    jpl_quat_mul,
    jpl_to_hamilton,
    quat_mul,
    rotate_vector,
    rotate_vector_inverse,
    to_rotation_matrix,
)


def main():
    np.set_printoptions(precision=5, suppress=True)

    # Two elementary rotations: 90 deg about x, then 45 deg about z.
    qx = from_axis_angle(np.array([1.0, 0.0, 0.0]), np.pi / 2)
    qz = from_axis_angle(np.array([0.0, 0.0, 1.0]), np.pi / 4)
    print("qx (90 deg about x):", qx)
    print("qz (45 deg about z):", qz)

    # Composition order decides which frame the second rotation acts in.
    q_local = quat_mul(qx, qz)   # qz applied about the rotated (local) z axis
    q_global = quat_mul(qz, qx)  # qz applied about the fixed (global) z axis
    print("\nlocal composition  qx * qz:", q_local)
    print("global composition qz * qx:", q_global)

    # Rotating a vector: local-to-global vs. global-to-local.
    v = np.array([0.0, 1.0, 0.0])
    print("\nv =", v)
    print("rotate_vector(q_local, v)         =", rotate_vector(q_local, v))
    print("rotate_vector_inverse(q_local, v) =", rotate_vector_inverse(q_local, v))

    # The rotation matrix gives the same answer.
    r = to_rotation_matrix(q_local)
    print("\nR @ v =", r @ v)

    # Bridging to the scalar-last JPL convention is a pure component
    # reorder; the product flips operand order under that convention.
    jx, jz = hamilton_to_jpl(qx), hamilton_to_jpl(qz)
    j_local = jpl_quat_mul(jz, jx)
    print("\nJPL form of local composition:", j_local)
    print("back to Hamilton:", jpl_to_hamilton(j_local))
    print("matches q_local:", np.allclose(jpl_to_hamilton(j_local), q_local))


if __name__ == "__main__":
    main()
