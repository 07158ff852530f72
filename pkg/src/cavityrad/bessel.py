"""Spherical Bessel functions j_l and tables of their positive zeros.

The zero table drives the sphere eigenfrequency enumeration: the scalar
Dirichlet eigenvalues of a ball of radius R are c*x/R over all zeros x of
j_l, each with the (2l+1) spherical-harmonic degeneracy.

Zeros are bracketed by the interlacing property against the l-1 level
(x_{n,l} < x_{n,l+1} < x_{n+1,l}) and polished with a safeguarded Newton
iteration. Level 0 is exact: j_0 = sin(x)/x vanishes at n*pi. One sentinel
zero beyond x_max is kept per level so the next level's last bracket always
exists; consecutive zeros are always more than pi apart, so a sign scan with
step 3 < pi regrows a lost sentinel without ever skipping a pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["spherical_jl", "spherical_bessel_zeros", "build_bessel_zero_table",
           "BesselZeroTable"]

_RESCALE = 1e250


def _j0(x):
    return np.sinc(x / np.pi)


def _j1(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 0.25
    xs = np.where(small, 1.0, x)
    closed = np.sin(xs) / xs**2 - np.cos(xs) / xs
    series = x / 3.0 * (1.0 - x**2 / 10.0 * (1.0 - x**2 / 28.0 * (1.0 - x**2 / 54.0)))
    return np.where(small, series, closed)


def spherical_jl(l, x):
    """Spherical Bessel function j_l(x) for x >= 0, vectorized over x.

    Closed forms for l <= 1; for l >= 2 a downward (Miller) recurrence
    normalized against j_0 or j_1, whichever is better conditioned at each
    point. Downward recurrence is stable on both sides of the turning point,
    unlike the upward direction which fails for x < l.
    """
    if not isinstance(l, (int, np.integer)) or l < 0:
        raise ValueError("l must be a nonnegative integer")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValueError("x must be finite and >= 0")
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if l == 0:
        out = _j0(x)
    elif l == 1:
        out = _j1(x)
    else:
        out = _miller(l, x)
    return float(out[0]) if scalar else out


def _miller(l, x):
    out = np.zeros_like(x)
    pos = x > 0.0
    xp = x[pos]
    if xp.size:
        m = max(l, int(math.ceil(float(xp.max()))))
        n_start = m + int(math.ceil(12.0 * m ** (1.0 / 3.0))) + 16
        jp = np.zeros_like(xp)
        jc = np.full_like(xp, 1e-30)
        out_l = np.zeros_like(xp)
        j1u = np.zeros_like(xp)
        inv = 1.0 / xp
        for n in range(n_start, 0, -1):
            jm = (2 * n + 1) * inv * jc - jp
            jp, jc = jc, jm
            if n - 1 == l:
                out_l = jc.copy()
            if n - 1 == 1:
                j1u = jc.copy()
            big = np.abs(jc) > _RESCALE
            if big.any():
                f = np.where(big, 1.0 / _RESCALE, 1.0)
                jp *= f
                jc *= f
                out_l *= f
                j1u *= f
        j0u = jc  # unnormalized j_0
        t0, t1 = _j0(xp), _j1(xp)
        use0 = np.abs(j0u) >= np.abs(j1u)
        with np.errstate(divide="ignore", invalid="ignore"):
            scale = np.where(use0, t0 / j0u, t1 / j1u)
        val = out_l * scale
        out[pos] = np.where(np.isfinite(val), val, 0.0)
    # j_l(0) = 0 for every l >= 1
    return out


def _jl_pair_upward(l, x):
    """(j_{l-1}, j_l) by upward recurrence; requires x > l (oscillatory zone)."""
    x = np.asarray(x, dtype=float)
    jm = np.sin(x) / x
    if l == 0:
        return None, jm
    jc = jm / x - np.cos(x) / x
    if l == 1:
        return jm, jc
    for n in range(1, l):
        jm, jc = jc, (2 * n + 1) / x * jc - jm
    return jm, jc


def _refine(l, lo, hi):
    """One zero of j_l inside each (lo, hi); safeguarded vectorized Newton."""
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    if lo.size and lo[0] <= l and l >= 2:
        raise RuntimeError("bracket entered the evanescent region x <= l")
    x = 0.5 * (lo + hi)
    _, f_left = _jl_pair_upward(l, lo + 1e-9 * (hi - lo))
    sign_left = np.sign(f_left)
    frozen = np.zeros(x.shape, dtype=bool)
    for _ in range(120):
        jm, f = _jl_pair_upward(l, x)
        fp = jm - (l + 1) / x * f
        with np.errstate(all="ignore"):
            xn = x - f / fp
        same = np.sign(f) == sign_left
        lo = np.where(~frozen & same, x, lo)
        hi = np.where(~frozen & ~same, x, hi)
        bad = ~np.isfinite(xn) | (xn <= lo) | (xn >= hi)
        xn = np.where(bad, 0.5 * (lo + hi), xn)
        newly = np.abs(xn - x) <= 1e-15 * x
        xn = np.where(frozen, x, xn)
        frozen |= newly
        x = xn
        if frozen.all():
            break
    return x


def _first_zero_above(l, z):
    """Leftmost zero of j_l above z; gaps exceed pi, so step 3 skips nothing."""
    a = z + 1e-9 * max(z, 1.0)
    _, fa = _jl_pair_upward(l, np.asarray([a]))
    s0 = np.sign(fa[0])
    for _ in range(200000):
        b = a + 3.0
        _, fb = _jl_pair_upward(l, np.asarray([b]))
        if np.sign(fb[0]) != s0 and fb[0] != 0.0:
            return float(_refine(l, [a], [b])[0])
        a = b
    raise RuntimeError("sign scan for the next zero of j_%d failed" % l)


@dataclass(frozen=True)
class BesselZeroTable:
    """Zeros of j_l in (0, x_max] for every l that has at least one.

    zeros_by_l[l] is strictly increasing; neighbouring levels interlace;
    level 0 is exactly pi, 2*pi, 3*pi, ...
    """

    x_max: float
    zeros_by_l: tuple

    @property
    def max_order(self):
        return len(self.zeros_by_l) - 1

    def zeros(self, l):
        return self.zeros_by_l[l]


def build_bessel_zero_table(x_max, max_order=None):
    """Tabulate the zeros of the spherical Bessel functions up to x_max.

    Levels stop at the first l with no zero below x_max, or at max_order.
    """
    if not (isinstance(x_max, (int, float)) and math.isfinite(x_max) and x_max > 0):
        raise ValueError("x_max must be finite and > 0")
    x_max = float(x_max)
    n0 = int(x_max / math.pi) + 1
    work = np.arange(1, n0 + 1) * math.pi
    if work[-1] <= x_max:
        work = np.append(work, (n0 + 1) * math.pi)
    levels = [work[work <= x_max]]
    if levels[0].size == 0:
        return BesselZeroTable(x_max, (np.empty(0),))
    l = 0
    while work.size >= 2 and (max_order is None or l < max_order):
        l += 1
        z = _refine(l, work[:-1], work[1:])
        pub = z[z <= x_max]
        if pub.size == 0:
            break
        if z[-1] <= x_max:
            z = np.append(z, _first_zero_above(l, float(z[-1])))
        work = z
        levels.append(pub)
    for arr in levels:
        arr.setflags(write=False)
    return BesselZeroTable(x_max, tuple(levels))


def spherical_bessel_zeros(l, x_max):
    """All zeros of j_l in (0, x_max], each accurate to ~1e-12 relative.

    Builds the interlacing chain up from level 0; the empty array is a valid
    result when j_l has no zero below x_max.
    """
    if not isinstance(l, (int, np.integer)) or l < 0:
        raise ValueError("l must be a nonnegative integer")
    table = build_bessel_zero_table(float(x_max), max_order=l)
    if l > table.max_order:
        return np.empty(0)
    return table.zeros(l)
