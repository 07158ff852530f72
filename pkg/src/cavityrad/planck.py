"""Planck spectral quantities for the infinite cavity.

The spectral energy density u(omega, T) is energy per unit volume per unit
angular frequency, J s/(rad m^3). Everything is expressed through the mean
thermal oscillator energy so that the omega -> 0 limits are analytic instead
of NaN (grids routinely contain omega = 0).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from .constants import C_LIGHT, HBAR, K_B

__all__ = [
    "mean_oscillator_energy",
    "planck_density",
    "radiation_constant",
    "planck_total_energy_density",
    "planck_energy_fraction_below",
    "planck_peak_frequency",
]

#: Stefan-Boltzmann-type radiation constant a in u_total = a T^4, J/(m^3 K^4)
radiation_constant = math.pi**2 * K_B**4 / (15.0 * HBAR**3 * C_LIGHT**3)

# Total of the dimensionless spectrum integral(x^3/(e^x - 1), 0, inf)
_TOTAL_X3 = math.pi**4 / 15.0


def _validate(omega, T):
    omega = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(omega)):
        raise ValueError("omega must be finite")
    if np.any(omega < 0.0):
        raise ValueError("omega must be >= 0")
    if not (isinstance(T, (int, float)) and math.isfinite(T)):
        raise ValueError("temperature must be a finite number")
    if T <= 0.0:
        raise ValueError("temperature must be > 0")
    return omega, float(T)


def mean_oscillator_energy(omega, T):
    """Mean thermal energy of an oscillator at angular frequency omega.

    Parameters
    ----------
    omega : float or array_like
        Angular frequency in rad/s, >= 0.
    T : float
        Temperature in K, > 0.

    Returns
    -------
    float or ndarray
        hbar*omega / (exp(hbar*omega/(k_B T)) - 1) in J; the omega -> 0
        limit k_B*T is returned at omega = 0.
    """
    omega, T = _validate(omega, T)
    x = HBAR * omega / (K_B * T)
    # exp(-x)/(1 - exp(-x)) is stable for every x > 0, unlike 1/expm1(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        occ = np.exp(-x) / (-np.expm1(-x))
        out = np.where(x > 0.0, HBAR * omega * occ, K_B * T)
    return float(out) if out.ndim == 0 else out


def planck_density(omega, T):
    """Planck spectral energy density of the infinite cavity, J s/(rad m^3)."""
    omega, T = _validate(omega, T)
    out = omega**2 / (math.pi**2 * C_LIGHT**3) * mean_oscillator_energy(omega, T)
    return float(out) if out.ndim == 0 else out


def planck_total_energy_density(T):
    """Closed-form total energy density a*T^4 in J/m^3."""
    _, T = _validate(0.0, T)
    return radiation_constant * T**4


def _dimensionless_spectrum(x):
    # x^3/(e^x - 1), stable for all x >= 0
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = x**3 * np.exp(-x) / (-np.expm1(-x))
    return np.where(x > 0.0, val, 0.0)


def _tail_integral(x0, terms=60):
    # integral(x^3 e^{-n x}) from x0 summed over n >= 1; converges in a few terms
    total = 0.0
    for n in range(1, terms + 1):
        e = math.exp(-n * x0)
        term = e * (x0**3 / n + 3 * x0**2 / n**2 + 6 * x0 / n**3 + 6 / n**4)
        total += term
        if term < 1e-30 * max(total, 1e-300):
            break
    return total


def planck_energy_fraction_below(omega_max, T):
    """Fraction of the total Planck energy carried below omega_max.

    Computed by adaptive quadrature in the dimensionless variable
    x = hbar*omega/(k_B T); for large upper limits the remainder is summed
    analytically as a series, keeping the absolute error below ~1e-12.
    """
    omega_max, T = _validate(omega_max, T)
    if omega_max.ndim != 0:
        raise ValueError("omega_max must be scalar")
    x_max = HBAR * float(omega_max) / (K_B * T)
    if x_max == 0.0:
        return 0.0
    if x_max >= 40.0:
        return 1.0 - _tail_integral(x_max) / _TOTAL_X3
    num, _ = quad(_dimensionless_spectrum, 0.0, x_max, epsabs=1e-14, epsrel=1e-13, limit=200)
    return num / _TOTAL_X3


def planck_peak_frequency(T):
    """Angular frequency maximizing planck_density at temperature T.

    The peak solves 3*(1 - e^{-x}) = x in x = hbar*omega/(k_B T).
    """
    _, T = _validate(0.0, T)
    x = 2.8214393721220787  # fixed point of 3*(1 - e^-x); verified by tests
    for _ in range(60):
        f = 3.0 * (1.0 - math.exp(-x)) - x
        fp = 3.0 * math.exp(-x) - 1.0
        step = f / fp
        x -= step
        if abs(step) < 1e-15 * x:
            break
    return x * K_B * T / HBAR
