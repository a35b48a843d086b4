"""Drive a 3-2-1 Euler-angle integrator into gimbal lock.

A constant pitch rate sweeps theta toward +90 degrees, where the map from
body rates to Euler-angle rates becomes singular. The propagator tracks the
conditioning number 1/|cos(theta)| and halts, flagged, when the singularity
threshold is crossed.
"""

import math

from attikit import pitch_sweep_dt, pitch_sweep_profile, propagate_euler_321


def main():
    rate = 0.5
    dt = pitch_sweep_dt(pitch_rate=rate, target_dt=1e-3)
    profile = pitch_sweep_profile(pitch_rate=rate)

    traj = propagate_euler_321((0.0, 0.0, 0.0), profile, dt=dt, t1=4.0)

    print(f"pitch rate: {rate} rad/s, dt: {dt:.6g} s")
    print(f"states emitted: {len(traj.states)}")
    print(f"halted at gimbal lock: {traj.gimbal_locked}")

    last = traj.states[-1]
    print(f"\nfinal time:  {last.t:.6f} s")
    print(f"final pitch: {last.theta:.12f} rad "
          f"(pi/2 - theta = {math.pi / 2 - last.theta:.3e})")
    print(f"conditioning 1/|cos(theta)|: {last.conditioning:.3e}")

    print("\nconditioning growth near the singularity:")
    for s in traj.states[-5:]:
        print(f"  t={s.t:7.4f}  theta={s.theta:.6f}  cond={s.conditioning:.3e}")


if __name__ == "__main__":
    main()
