"""Film and rod spectra versus the Planck formula.

Walks through the two open geometries at 300 K: the cutoff below which the
Dirichlet and antiperiodic densities vanish identically, the staircase
structure at small plate separation, and the convergence of everything onto
the Planck curve once the constrained lengths are large. Prints a compact
table; plots if matplotlib is importable.

Run:  python demos/01_film_and_rod_spectra.py
"""

import math

import numpy as np

from cavityrad import (
    C_LIGHT,
    BoundaryCondition,
    FilmGeometry,
    RodGeometry,
    ThresholdSingularityError,
    film_density,
    planck_density,
    planck_energy_fraction_below,
    planck_peak_frequency,
    planck_total_energy_density,
    rod_density,
)

T = 300.0
omega = np.linspace(0.0, 1e15, 2000)

print("Planck reference at %.0f K" % T)
print("  total energy density : %.4e J/m^3" % planck_total_energy_density(T))
print("  spectral peak        : %.4e rad/s" % planck_peak_frequency(T))
frac = planck_energy_fraction_below(2 * math.pi * C_LIGHT / 3e-6, T)
print("  fraction below lambda = 3 um: %.4f  (i.e. >99%% of the energy)" % frac)
print()

print("Film cutoffs (c*pi/L, rad/s) and ratio to Planck at the peak:")
wp = planck_peak_frequency(T)
for L in (1e-5, 5e-5, 2e-4, 1e-2):
    film = FilmGeometry(L)
    cut = C_LIGHT * math.pi / L
    ratios = []
    for bc in BoundaryCondition:
        u = film_density(wp, T, film, bc)
        ratios.append("%s %.3f" % (bc.value[:4], u / planck_density(wp, T)))
    print("  L = %7.0e m   cutoff %.2e   u/planck @peak: %s" % (L, cut, "  ".join(ratios)))
print()

print("Rod (square cross-section) at the peak frequency; note the much")
print("stronger oscillation: every transverse threshold is an integrable")
print("inverse-square-root singularity of the pointwise density.")
for L in (1e-5, 5e-5, 2e-4):
    rod = RodGeometry(L, L)
    vals = []
    for bc in BoundaryCondition:
        try:
            u = rod_density(wp, T, rod, bc)
            vals.append("%s %.3f" % (bc.value[:4], u / planck_density(wp, T)))
        except ThresholdSingularityError:
            vals.append("%s singular" % bc.value[:4])
    print("  L = %7.0e m   u/planck @peak: %s" % (L, "  ".join(vals)))

try:
    import matplotlib.pyplot as plt
except ModuleNotFoundError:
    print("\n(matplotlib not installed; skipping the figure)")
else:
    fig, axes = plt.subplots(3, 1, figsize=(6, 9), sharex=True)
    for ax, bc in zip(axes, BoundaryCondition):
        for L, color in ((1e-5, "C0"), (5e-5, "C1"), (2e-4, "C2")):
            ax.plot(omega, film_density(omega, T, FilmGeometry(L), bc),
                    color=color, lw=1.0, label="L = %.0e m" % L)
        ax.plot(omega, planck_density(omega, T), "k--", lw=1.2, label="planck")
        ax.set_ylabel("u, J s/(rad m$^3$)")
        ax.set_title("film, %s" % bc.value)
        ax.legend(fontsize=8, frameon=False)
    axes[-1].set_xlabel("omega, rad/s")
    fig.tight_layout()
    fig.savefig("film_spectra.png", dpi=150)
    print("\nwrote film_spectra.png")
