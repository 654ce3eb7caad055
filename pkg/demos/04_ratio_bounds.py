#!/usr/bin/env python3
"""Two-sided bounds for gamma and q-gamma ratios.

Shows the classical sandwiches for Gamma(x+1)/Gamma(x+s), how they tighten as
x grows, the q-deformation that interpolates them, and the monotone-ratio
mechanism behind the q-sandwich's lower bound.
"""

import numpy as np

from qgamma.bounds import (
    gautschi_bounds,
    kershaw_power_bounds,
    kershaw_psi_bounds,
    q_sandwich,
)

print("=" * 72)
print("gamma-ratio sandwiches")
print("=" * 72)

print("\ninteger-argument bounds, s = 0.5:")
for n in (1, 2, 5, 20):
    t = gautschi_bounds(n, 0.5)
    print(f"  n={n:2d}: {t.lower:.6f} < {t.value:.6f} < {t.upper:.6f} "
          f"(margins {t.lower_margin:.2e}, {t.upper_margin:.2e})")

print("\npsi-based vs power-based bounds at x = 1, s = 0.5:")
tp = kershaw_psi_bounds(1.0, 0.5)
tw = kershaw_power_bounds(1.0, 0.5)
print(f"  psi form  : {tp.lower:.7f} < {tp.value:.7f} < {tp.upper:.7f}")
print(f"  power form: {tw.lower:.7f} < {tw.value:.7f} < {tw.upper:.7f}")

print("\nthe power bounds tighten like O(1/x): relative upper margin")
for x in (1.0, 3.0, 10.0, 30.0):
    t = kershaw_power_bounds(x, 0.3)
    print(f"  x={x:5.1f}: {t.upper_margin / t.value:.2e}")

print("\nq-sandwich at x = 1, s = 0.5 for a range of q:")
for q in (0.3, 0.5, 0.9, 1.0):
    t = q_sandwich(1.0, 0.5, q)
    print(f"  q={q:<4}: {t.lower:.7f} < {t.value:.7f} < {t.upper:.7f}")

# the lower bound works because the normalized ratio decreases to 1 on
# (-s/2, inf); sample it
print("\nnormalized ratio value/lower at q = 0.5, s = 0.5 (decreasing to 1):")
for x in (-0.2, 0.5, 2.0, 8.0, 30.0):
    t = q_sandwich(x, 0.5, 0.5)
    print(f"  x={x:5.1f}: {t.value / t.lower:.10f}")
