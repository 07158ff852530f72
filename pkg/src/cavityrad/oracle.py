"""Brute-force validators kept deliberately independent of the main path.

Everything here is elementary: triple loops, composite midpoint rules, and
one Richardson extrapolation. The only coordination with the fast
enumeration is the arithmetic shape of the frequency formula and the merge
convention, so that mode frequencies compare bit-equal; no code is shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT
from .errors import QuadratureError
from .geometry import BoundaryCondition, BoxGeometry
from .modes import MERGE_RTOL, ModeList

__all__ = ["OracleReport", "naive_box_count", "quadrature_total_energy"]

_DEV_FLOOR = 1e-300


@dataclass(frozen=True)
class OracleReport:
    """One reference-vs-candidate comparison with a stated tolerance."""

    label: str
    reference: float
    candidate: float
    tolerance: float
    rel_dev: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        dev = abs(self.candidate - self.reference) / max(abs(self.reference), _DEV_FLOOR)
        object.__setattr__(self, "rel_dev", dev)
        object.__setattr__(self, "passed", dev <= self.tolerance)

    def csv_row(self):
        return "%s,%r,%r,%r,%s" % (
            self.label, self.reference, self.candidate, self.rel_dev,
            "pass" if self.passed else "FAIL",
        )


def _axis_values(L, bc, k_max):
    # same admission bounds and arithmetic shape as the fast path, plain loops
    vals = []
    if bc is BoundaryCondition.PERIODIC:
        m = math.ceil(k_max * L / (2.0 * math.pi)) + 1
        for n in range(-m, m + 1):
            vals.append((2.0 * math.pi * n) / L)
    elif bc is BoundaryCondition.ANTIPERIODIC:
        m = math.ceil(k_max * L / (2.0 * math.pi) + 0.5) + 1
        for n in range(-m, m):
            vals.append((2.0 * math.pi * (n + 0.5)) / L)
    elif bc is BoundaryCondition.DIRICHLET:
        m = math.ceil(k_max * L / math.pi) + 1
        for n in range(1, m + 1):
            vals.append((math.pi * n) / L)
    else:
        raise TypeError("bc must be a BoundaryCondition")
    return vals


def naive_box_count(geom: BoxGeometry, bc: BoundaryCondition, omega_max,
                    max_points=10**6):
    """Triple-loop box enumeration used as the exactness reference.

    Refuses scans above max_points so the oracle stays small and auditable.
    """
    if not (omega_max > 0 and math.isfinite(omega_max)):
        raise ValueError("omega_max must be finite and > 0")
    k_max = omega_max / C_LIGHT
    a1 = _axis_values(geom.L1, bc, k_max)
    a2 = _axis_values(geom.L2, bc, k_max)
    a3 = _axis_values(geom.L3, bc, k_max)
    n_scan = len(a1) * len(a2) * len(a3)
    if n_scan > max_points:
        raise ValueError(
            "oracle scan budget exceeded: %d > %d lattice points" % (n_scan, max_points)
        )
    freqs = []
    for k1 in a1:
        for k2 in a2:
            t23 = k2 * k2
            for k3 in a3:
                s = k1 * k1 + (t23 + k3 * k3)
                if s <= 0.0:
                    continue
                w = C_LIGHT * math.sqrt(s)
                if w <= omega_max:
                    freqs.append(w)
    freqs.sort()
    # chain merge: break wherever the gap to the previous value exceeds the
    # relative tolerance; the group representative is its first value
    omegas, counts = [], []
    prev = None
    for w in freqs:
        if prev is not None and w - prev <= MERGE_RTOL * prev:
            counts[-1] += 1
        else:
            omegas.append(w)
            counts.append(1)
        prev = w
    return ModeList(
        np.asarray(omegas, dtype=float),
        2 * np.asarray(counts, dtype=np.int64),
        float(omega_max),
    )


def _call_density(fn, x, vectorized):
    if vectorized:
        return np.asarray(fn(x), dtype=float)
    return np.asarray([fn(float(v)) for v in x], dtype=float)


def _midpoint_interval(fn, a, b, n, substitute, vectorized):
    if substitute:
        # u = sqrt(omega - a) regularizes the inverse-square-root threshold at a
        span = math.sqrt(b - a)
        h = span / n
        u = (np.arange(n) + 0.5) * h
        x = a + u * u
        return float(np.sum(_call_density(fn, x, vectorized) * 2.0 * u) * h)
    h = (b - a) / n
    x = a + (np.arange(n) + 0.5) * h
    return float(np.sum(_call_density(fn, x, vectorized)) * h)


def _refine_interval(fn, a, b, substitute, vectorized, initial_panels, rel_tol,
                     abs_tol, max_panels):
    n = initial_panels
    prev_mid = _midpoint_interval(fn, a, b, n, substitute, vectorized)
    prev_rich = None
    while n < max_panels:
        n *= 2
        mid = _midpoint_interval(fn, a, b, n, substitute, vectorized)
        rich = mid + (mid - prev_mid) / 3.0  # midpoint rule is O(h^2); one Richardson step
        if prev_rich is not None and abs(rich - prev_rich) <= max(rel_tol * abs(rich), abs_tol):
            return rich
        prev_mid, prev_rich = mid, rich
    raise QuadratureError(prev_rich if prev_rich is not None else prev_mid, prev_mid)


def quadrature_total_energy(density_fn, omega_max, initial_panels=64, *,
                            thresholds=(), rel_tol=1e-10, max_panels=2**22,
                            vectorized=None):
    """Integral of a spectral density over [0, omega_max], J/m^3.

    Composite midpoint rule with one Richardson refinement per interval.
    thresholds lists interior frequencies where the integrand has an
    inverse-square-root singularity (rod mode thresholds); each interval
    starting at a threshold is integrated in the substituted variable
    u = sqrt(omega - omega_th), where the integrand is regular.

    Raises QuadratureError with the last two estimates on non-convergence.
    """
    if not (omega_max > 0 and math.isfinite(omega_max)):
        raise ValueError("omega_max must be finite and > 0")
    th = np.asarray(sorted(t for t in np.atleast_1d(np.asarray(thresholds, dtype=float)).ravel()
                           if 0.0 < t < omega_max), dtype=float)
    edges = np.concatenate(([0.0], th, [omega_max]))
    if vectorized is None:
        try:
            probe = density_fn(np.asarray([0.25 * omega_max, 0.5 * omega_max]))
            vectorized = np.asarray(probe).shape == (2,)
        except Exception:
            vectorized = False
    # coarse pass fixes an absolute floor so near-empty intervals stop early
    coarse = 0.0
    for i, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        if b > a:
            coarse += abs(_midpoint_interval(density_fn, a, b, initial_panels,
                                             i > 0, vectorized))
    abs_tol = rel_tol * max(coarse, _DEV_FLOOR) / max(len(edges) - 1, 1)
    total = 0.0
    for i, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        if b > a:
            total += _refine_interval(density_fn, a, b, i > 0, vectorized,
                                      initial_panels, rel_tol, abs_tol, max_panels)
    return total
