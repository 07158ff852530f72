"""Spectral energy densities of films and rods.

A film (two infinite plates a distance L1 apart) has the closed form

    u(omega, T) = hbar*omega^2/(pi c^2 L1 (e^{hbar omega/k_B T} - 1)) * N(omega)

where N is the number of admitted longitudinal wavenumbers; the rod version
sums 1/sqrt(omega^2/c^2 - k_perp^2) over the admitted transverse modes and is
singular at every transverse threshold (the singularity is integrable but the
pointwise value is unbounded, so evaluation inside a narrow guard window is
refused rather than returning astronomically large floats).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .constants import C_LIGHT
from .errors import ThresholdSingularityError
from .geometry import BoundaryCondition, FilmGeometry, RodGeometry
from .planck import mean_oscillator_energy

__all__ = [
    "film_mode_count",
    "film_density",
    "rod_transverse_modes",
    "rod_density",
    "rod_threshold_frequencies",
    "rod_window_average",
]

#: relative half-width of the rod threshold guard window
THRESHOLD_GUARD = 1e-9


def film_mode_count(omega, geom: FilmGeometry, bc: BoundaryCondition):
    """Number of longitudinal wavenumbers admitted below omega/c.

    periodic      2*floor(omega L1/(2 c pi)) + 1
    antiperiodic  2*floor(omega L1/(2 c pi) + 1/2)
    dirichlet     floor(omega L1/(c pi))

    Floors jump at exact integer arguments and take the upper value there
    (right-continuity in omega): a mode is counted the instant it is admitted.
    """
    omega = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(omega)) or np.any(omega < 0):
        raise ValueError("omega must be finite and >= 0")
    if bc is BoundaryCondition.PERIODIC:
        n = 2.0 * np.floor(omega * geom.L1 / (2.0 * C_LIGHT * math.pi)) + 1.0
    elif bc is BoundaryCondition.ANTIPERIODIC:
        n = 2.0 * np.floor(omega * geom.L1 / (2.0 * C_LIGHT * math.pi) + 0.5)
    elif bc is BoundaryCondition.DIRICHLET:
        n = np.floor(omega * geom.L1 / (C_LIGHT * math.pi))
    else:
        raise TypeError("bc must be a BoundaryCondition")
    return int(n) if n.ndim == 0 else n.astype(np.int64)


def film_density(omega, T, geom: FilmGeometry, bc: BoundaryCondition):
    """Film spectral energy density, J s/(rad m^3). Vectorized over omega."""
    counts = film_mode_count(omega, geom, bc)
    omega = np.asarray(omega, dtype=float)
    pref = omega * mean_oscillator_energy(omega, T) / (math.pi * C_LIGHT**2 * geom.L1)
    out = pref * counts
    return float(out) if out.ndim == 0 else out


def _axis_extent(L, bc, k_cap):
    """Integer axis extent covering |k_i| <= k_cap with one spare entry."""
    if bc is BoundaryCondition.PERIODIC:
        return math.ceil(k_cap * L / (2.0 * math.pi)) + 1
    if bc is BoundaryCondition.ANTIPERIODIC:
        return math.ceil(k_cap * L / (2.0 * math.pi) + 0.5) + 1
    if bc is BoundaryCondition.DIRICHLET:
        return math.ceil(k_cap * L / math.pi) + 1
    raise TypeError("bc must be a BoundaryCondition")


def _axis_wavenumbers(L, bc, extent):
    """Wavenumbers and their integer labels for a given axis extent."""
    if bc is BoundaryCondition.PERIODIC:
        n = np.arange(-extent, extent + 1)
        return 2.0 * math.pi * n / L, n
    if bc is BoundaryCondition.ANTIPERIODIC:
        n = np.arange(-extent, extent)
        return 2.0 * math.pi * (n + 0.5) / L, n
    n = np.arange(1, extent + 1)
    return math.pi * n / L, n


@lru_cache(maxsize=32)
def _k2_sorted_cached(L1, L2, bc_value, m1, m2):
    bc = BoundaryCondition(bc_value)
    k1, _ = _axis_wavenumbers(L1, bc, m1)
    k2, _ = _axis_wavenumbers(L2, bc, m2)
    s = (k1**2)[:, None] + (k2**2)[None, :]
    s = np.sort(s.ravel())
    s.setflags(write=False)
    return s


def _transverse_k2(geom, bc, k_cap):
    """Sorted transverse k^2 grid covering k_perp <= k_cap (cached)."""
    m1 = _axis_extent(geom.L1, bc, k_cap)
    m2 = _axis_extent(geom.L2, bc, k_cap)
    return _k2_sorted_cached(geom.L1, geom.L2, bc.value, m1, m2)


def rod_transverse_modes(omega, geom: RodGeometry, bc: BoundaryCondition):
    """Admitted transverse wavevector pairs with k1^2 + k2^2 < (omega/c)^2.

    Returns an (N, 2) float array sorted by (k1^2 + k2^2, k1, k2); the empty
    set is a valid result. The inequality is strict, as in the rod sum.
    """
    if not (isinstance(omega, (int, float)) and math.isfinite(omega) and omega >= 0):
        raise ValueError("omega must be finite and >= 0")
    k = omega / C_LIGHT
    k1, _ = _axis_wavenumbers(geom.L1, bc, _axis_extent(geom.L1, bc, k))
    k2, _ = _axis_wavenumbers(geom.L2, bc, _axis_extent(geom.L2, bc, k))
    s = (k1**2)[:, None] + (k2**2)[None, :]
    i1, i2 = np.nonzero(s < k * k)
    pairs = np.column_stack([k1[i1], k2[i2]])
    order = np.lexsort((pairs[:, 1], pairs[:, 0], pairs[:, 0] ** 2 + pairs[:, 1] ** 2))
    return pairs[order]


def rod_density(omega, T, geom: RodGeometry, bc: BoundaryCondition,
                threshold_guard=THRESHOLD_GUARD):
    """Rod spectral energy density at a single angular frequency.

    Parameters
    ----------
    omega, T : float
        Angular frequency (rad/s) and temperature (K).
    geom, bc : RodGeometry, BoundaryCondition
    threshold_guard : float
        Relative half-width of the refusal window around each transverse
        threshold. Pass 0 to disable (used when integrating across
        thresholds with a regularizing substitution).

    Raises
    ------
    ThresholdSingularityError
        If omega/c lies within the guard window of an admitted or boundary
        mode, where the pointwise density is genuinely unbounded.
    """
    if not (isinstance(omega, (int, float)) and math.isfinite(omega) and omega >= 0):
        raise ValueError("omega must be finite and >= 0")
    if omega == 0.0:
        return 0.0
    k = omega / C_LIGHT
    s = _transverse_k2(geom, bc, k * (1.0 + 4.0 * max(threshold_guard, 1e-9)))
    if threshold_guard > 0.0:
        lo = (k * (1.0 - threshold_guard)) ** 2
        hi = (k * (1.0 + threshold_guard)) ** 2
        i0, i1 = np.searchsorted(s, [lo, hi], side="left")
        if i1 > i0:
            _raise_naming_mode(omega, geom, bc, math.sqrt(s[i0]))
    n = np.searchsorted(s, k * k, side="left")
    if n == 0:
        return 0.0
    # ascending s = ascending term magnitude keeps the sum well conditioned
    terms = 1.0 / np.sqrt(k * k - s[:n])
    total = float(np.sum(terms))
    pref = 2.0 * omega * mean_oscillator_energy(omega, T) / (
        math.pi * C_LIGHT**2 * geom.L1 * geom.L2
    )
    return pref * total


def _raise_naming_mode(omega, geom, bc, k_perp):
    # error path only: recover the lattice indices of the offending mode
    k1, n1 = _axis_wavenumbers(geom.L1, bc, _axis_extent(geom.L1, bc, k_perp * 1.001))
    k2, n2 = _axis_wavenumbers(geom.L2, bc, _axis_extent(geom.L2, bc, k_perp * 1.001))
    s = (k1**2)[:, None] + (k2**2)[None, :]
    i, j = np.unravel_index(np.argmin(np.abs(s - k_perp**2)), s.shape)
    raise ThresholdSingularityError(omega, int(n1[i]), int(n2[j]), k_perp)


def rod_threshold_frequencies(geom: RodGeometry, bc: BoundaryCondition, omega_max):
    """Distinct positive transverse thresholds c*k_perp <= omega_max, sorted.

    The periodic (0, 0) mode is admitted from omega = 0+ and contributes no
    positive threshold.
    """
    if not (isinstance(omega_max, (int, float)) and math.isfinite(omega_max) and omega_max > 0):
        raise ValueError("omega_max must be finite and > 0")
    s = _transverse_k2(geom, bc, omega_max / C_LIGHT)
    w = C_LIGHT * np.sqrt(np.unique(s[s > 0.0]))
    return w[w <= omega_max]


def rod_window_average(omega, T, geom: RodGeometry, bc: BoundaryCondition):
    """Average rod density over the inter-threshold interval containing omega.

    The interval [a, b) between two consecutive distinct thresholds contains
    no singularity in its interior; each mode's 1/sqrt(omega^2/c^2 - s) term
    is integrated with its exact antiderivative c*ln(omega + sqrt(omega^2 -
    c^2 s)), and the smooth thermal prefactor is applied piecewise at
    sub-interval midpoints. omega must lie strictly above the first distinct
    threshold.
    """
    if not (isinstance(omega, (int, float)) and math.isfinite(omega) and omega > 0):
        raise ValueError("omega must be finite and > 0")
    cap = 1.25
    while True:
        thresholds = rod_threshold_frequencies(geom, bc, omega * cap)
        i = int(np.searchsorted(thresholds, omega, side="right"))
        if i == 0:
            raise ValueError("omega lies below the first transverse threshold")
        if i < len(thresholds):
            break
        cap *= 2.0
        if cap > 64.0:
            raise ValueError("no transverse threshold found above omega")
    a = float(thresholds[i - 1])
    b = float(thresholds[i])
    s = _transverse_k2(geom, bc, b / C_LIGHT)
    mid_all = 0.5 * (a + b)
    s_adm = s[s < (mid_all / C_LIGHT) ** 2]

    def antiderivative(w):
        r = np.sqrt(np.maximum(w * w - C_LIGHT**2 * s_adm, 0.0))
        return C_LIGHT * np.log(w + r)

    # subdivide so the thermal prefactor varies by < ~1e-3 per piece
    pieces = max(1, math.ceil((b - a) / (1e-3 * mid_all)))
    edges = np.linspace(a, b, pieces + 1)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        pref = 2.0 * mid * mean_oscillator_energy(mid, T) / (
            math.pi * C_LIGHT**2 * geom.L1 * geom.L2
        )
        total += pref * float(np.sum(antiderivative(hi) - antiderivative(lo)))
    return total / (b - a)
