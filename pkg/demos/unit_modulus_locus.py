"""Trace the curve |W(sigma + it)| = 1 off the critical line.

For every sigma other than 1/2 there is exactly one crossing for t > 0, and it
sits in a thin band just above 2 pi.  The quartic fit to G on the line predicts
how far from 1/2 the curve bends.
"""
import math

from zetamap import boundedness_scan, g_quartic_roots, taylor_coeffs, unit_modulus_crossing, zeta_along_locus

report = boundedness_scan([0.0, 0.1, 0.25, 0.4, 0.6, 0.75, 0.9, 1.0], t_max=30.0)
print("sigma    t*              t* - 2pi")
for entry in report.entries:
    for p in entry.crossings:
        print(f"{p.sigma:4.2f}   {p.t_star:.12f}  {p.t_star - 2 * math.pi:.3e}")
print("scan ok:", report.ok, "| skipped:", [s.sigma for s in report.skipped])

# one crossing refined on its own bracket
p = unit_modulus_crossing(0.3, 6.0, 7.0)
print(f"\nsigma = 0.3: t* = {p.t_star:.12f}, residual {p.residual:.1e}")

# zeta is far from zero along the locus, and |zeta(s)| = |zeta(1-s)| there
for row in zeta_along_locus([p for e in report.entries for p in e.crossings][:3]):
    print(f"  sigma = {row.sigma:4.2f}  |zeta(s)| = {row.abs_zeta_s:.10f}  |zeta(1-s)| = {row.abs_zeta_1ms:.10f}")

expansion = taylor_coeffs(2 * math.pi)
lo, hi = g_quartic_roots(2 * math.pi)
print("\nabout sigma = 1/2 at t = 2pi (even orders: G - 4 ln pi, odd orders: dG/dsigma)")
for order in range(6):
    print(f"  delta^{order}: {expansion.coefficient(order):+.8e}")
print(f"  model G at delta = 0.25: {float(expansion.g(0.25)):+.6e}")
print(f"quartic model vanishes at delta = {lo:.10f}, {hi:.10f}")
