"""Under the hood of the sphere spectrum: Bessel zero tables and mode counts.

The sphere's discrete frequencies are c*x/R over the zeros x of the
spherical Bessel functions. This script builds a table, shows the exact
l = 0 seeds and the interlacing between neighbouring orders, then checks the
cumulative mode count against the volume (Weyl) term it must approach.

Run:  python demos/03_bessel_zeros_and_mode_counts.py
"""

import math

import numpy as np

from cavityrad import (
    C_LIGHT,
    SphereGeometry,
    build_bessel_zero_table,
    enumerate_sphere_modes,
    spherical_jl,
)

table = build_bessel_zero_table(40.0)
print("zeros of j_l in (0, 40], levels 0..%d" % table.max_order)
print("  l=0 (exact n*pi):", np.round(table.zeros(0)[:5], 6), "...")
print("  l=1 (tan x = x) :", np.round(table.zeros(1)[:5], 6), "...")
print("  interlacing, first window: %.4f < %.4f < %.4f"
      % (table.zeros(0)[0], table.zeros(1)[0], table.zeros(0)[1]))

worst = max(
    float(np.max(np.abs(spherical_jl(l, table.zeros(l)))))
    for l in range(table.max_order + 1)
    if table.zeros(l).size
)
print("  worst |j_l| at a tabulated zero: %.2e" % worst)
print()

R = 5e-6
sphere = SphereGeometry(2 * R)
print("sphere d = %.0e m: cumulative mode count vs the volume term" % (2 * R))
print("  %-8s %-10s %-12s %s" % ("x=wR/c", "N(<=w)", "V w^3/3pi^2c^3", "ratio"))
for x in (10.0, 20.0, 50.0):
    omega_max = x * C_LIGHT / R
    modes = enumerate_sphere_modes(sphere, omega_max)
    lead = sphere.volume * omega_max**3 / (3 * math.pi**2 * C_LIGHT**3)
    print("  %-8.0f %-10d %-12.0f %.3f" % (x, modes.total_mode_count, lead,
                                           modes.total_mode_count / lead))
print()
print("The deficit with respect to the volume term is the surface correction")
print("that the three-term Weyl density models explicitly.")
