"""Exact discrete eigenfrequency enumeration for closed cavities.

Boxes: omega = c*k with k from the quantization rule of the boundary
condition (integers, half-integers, or positive integers over pi/L_i).
Spheres: scalar Dirichlet eigenvalues omega = c*x_{n,l}/R over the zeros of
the spherical Bessel functions, each carrying the (2l+1) harmonic
degeneracy.

Every multiplicity carries a global polarization factor 2, which is what
makes the large-cavity limit of the binned spectrum converge to the Planck
formula (whose density V omega^2/(pi^2 c^3) counts both polarizations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import build_bessel_zero_table
from .constants import C_LIGHT
from .errors import ResourceLimitError
from .geometry import BoundaryCondition, BoxGeometry, SphereGeometry
from .planck import mean_oscillator_energy

__all__ = ["ModeList", "enumerate_box_modes", "enumerate_sphere_modes",
           "MERGE_RTOL", "DEFAULT_LATTICE_CAP"]

#: relative tolerance below which neighbouring frequencies merge into one entry
MERGE_RTOL = 1e-12

#: default cap on the number of lattice points a single enumeration may scan
DEFAULT_LATTICE_CAP = 10**8


@dataclass(frozen=True)
class ModeList:
    """Sorted discrete spectrum: (omega_i, N_i) pairs below a cutoff.

    omegas is strictly increasing, multiplicities are positive even integers
    (the polarization factor 2 is included), and the list is complete below
    omega_max.
    """

    omegas: np.ndarray
    multiplicities: np.ndarray
    omega_max: float

    def __len__(self):
        return len(self.omegas)

    @property
    def total_mode_count(self):
        """N(<= omega_max): total number of modes including multiplicity."""
        return int(self.multiplicities.sum())

    def thermal_energy(self, T):
        """Total thermal energy sum(N_i * eps(omega_i, T)) in J."""
        if len(self.omegas) == 0:
            return 0.0
        return float(np.sum(self.multiplicities * mean_oscillator_energy(self.omegas, T)))


def _merge_weighted(omegas, weights):
    """Sort and merge entries whose neighbour gap is below MERGE_RTOL.

    Chain convention: consecutive values whose gap is <= rtol*left merge into
    one group represented by its smallest member; weights are summed.
    """
    order = np.argsort(omegas, kind="stable")
    om = omegas[order]
    wt = weights[order]
    if om.size == 0:
        return om, wt.astype(np.int64)
    new_group = np.empty(om.size, dtype=bool)
    new_group[0] = True
    new_group[1:] = np.diff(om) > MERGE_RTOL * om[:-1]
    starts = np.flatnonzero(new_group)
    return om[starts], np.add.reduceat(wt, starts).astype(np.int64)


def _box_axis(L, bc, k_max):
    """All candidate wavenumbers on one box axis covering |k| <= k_max."""
    if bc is BoundaryCondition.PERIODIC:
        m = math.ceil(k_max * L / (2.0 * math.pi)) + 1
        return 2.0 * math.pi * np.arange(-m, m + 1) / L
    if bc is BoundaryCondition.ANTIPERIODIC:
        m = math.ceil(k_max * L / (2.0 * math.pi) + 0.5) + 1
        return 2.0 * math.pi * (np.arange(-m, m) + 0.5) / L
    if bc is BoundaryCondition.DIRICHLET:
        m = math.ceil(k_max * L / math.pi) + 1
        return math.pi * np.arange(1, m + 1) / L
    raise TypeError("bc must be a BoundaryCondition")


def enumerate_box_modes(geom: BoxGeometry, bc: BoundaryCondition, omega_max,
                        max_lattice_points=DEFAULT_LATTICE_CAP):
    """Every box eigenfrequency omega = c*k <= omega_max as a ModeList.

    Frequencies agreeing within 1e-12 relative merge with summed
    multiplicities, then every multiplicity is doubled for polarization.
    The periodic (0,0,0) zero mode is excluded. A cutoff implying more
    bounding-lattice points than max_lattice_points raises
    ResourceLimitError naming the required count.
    """
    if not (isinstance(omega_max, (int, float)) and math.isfinite(omega_max) and omega_max > 0):
        raise ValueError("omega_max must be finite and > 0")
    k_max = omega_max / C_LIGHT
    k1 = _box_axis(geom.L1, bc, k_max)
    k2 = _box_axis(geom.L2, bc, k_max)
    k3 = _box_axis(geom.L3, bc, k_max)
    required = k1.size * k2.size * k3.size
    if required > max_lattice_points:
        raise ResourceLimitError(required, max_lattice_points)
    s_cap = (k_max * k_max) * (1.0 + 4e-16)  # superset; exact filter in omega below
    collected = []
    if k2.size * k3.size <= 5 * 10**7:
        grid = (k2**2)[:, None] + (k3**2)[None, :]
        grid = grid.ravel()
        for a in k1 * k1:
            s = a + grid
            collected.append(s[s <= s_cap])
    else:
        for a in k1 * k1:
            for b in k2 * k2:
                s = (a + b) + k3 * k3
                collected.append(s[s <= s_cap])
    s = np.concatenate(collected) if collected else np.empty(0)
    s = s[s > 0.0]  # periodic zero mode carries no energy
    om = C_LIGHT * np.sqrt(s)
    om = om[om <= omega_max]
    om_u, counts = _merge_weighted(om, np.ones(om.size, dtype=np.int64))
    return ModeList(om_u, 2 * counts, float(omega_max))


def enumerate_sphere_modes(geom: SphereGeometry, omega_max,
                           max_lattice_points=DEFAULT_LATTICE_CAP):
    """Scalar Dirichlet sphere spectrum omega = c*x_{n,l}/R as a ModeList.

    Each Bessel zero contributes multiplicity 2*(2l+1): the spherical
    harmonic degeneracy times the global polarization factor.
    """
    if not (isinstance(omega_max, (int, float)) and math.isfinite(omega_max) and omega_max > 0):
        raise ValueError("omega_max must be finite and > 0")
    radius = geom.radius
    x_max = omega_max * radius / C_LIGHT
    required = int(x_max * x_max / 8.0 + x_max) + 1  # zero-count estimate
    if required > max_lattice_points:
        raise ResourceLimitError(required, max_lattice_points)
    if x_max < math.pi:
        return ModeList(np.empty(0), np.empty(0, dtype=np.int64), float(omega_max))
    table = build_bessel_zero_table(x_max)
    omegas, weights = [], []
    for l, zeros in enumerate(table.zeros_by_l):
        if zeros.size == 0:
            continue
        om = C_LIGHT * zeros / radius
        om = om[om <= omega_max]
        omegas.append(om)
        weights.append(np.full(om.size, 2 * (2 * l + 1), dtype=np.int64))
    if not omegas:
        return ModeList(np.empty(0), np.empty(0, dtype=np.int64), float(omega_max))
    om_u, counts = _merge_weighted(np.concatenate(omegas), np.concatenate(weights))
    return ModeList(om_u, counts, float(omega_max))
