"""Walk W along the critical line and watch |W| stay at 1 while the phase turns.

Off the line the modulus drifts away from 1 in opposite directions on either
side, which is what makes the line special.
"""
import math

import numpy as np

from zetamap import critical_line_map, dw_abs_dt, w_abs

m = critical_line_map(-30.0, 30.0, 13)
print("     t          Re W          Im W       |W|")
for t, u, v in m:
    print(f"{t:8.2f}  {u:12.8f}  {v:12.8f}  {math.hypot(u, v):.12f}")

# the phase winds monotonically once t is past the first few units
phase = np.unwrap(np.arctan2(m[:, 2], m[:, 1]))
print("\nphase change over [-30, 30]:", f"{phase[-1] - phase[0]:.4f} rad")

print("\n|W| and d|W|/dt at t = 10 for a few sigma")
for sigma in (0.0, 0.25, 0.5, 0.75, 1.0):
    s = complex(sigma, 10.0)
    slope = 0.0 if sigma == 0.5 else dw_abs_dt(s)
    print(f"  sigma = {sigma:4.2f}  |W| = {w_abs(s):.8f}  d|W|/dt = {slope:+.3e}")
