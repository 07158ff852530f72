"""Spherical Bessel evaluator and zero tables: exact l=0 seeds, the
tan x = x root, interlacing, and residuals through the public evaluator."""

import math

import numpy as np
import pytest

from cavityrad import (
    BesselZeroTable,
    build_bessel_zero_table,
    spherical_bessel_zeros,
    spherical_jl,
)

# frozen root of x*cos(x) = sin(x), cross-checked by the bisection oracle below
FIRST_J1_ZERO = 4.493409457909064


def bisect_j1_zero(lo=4.0, hi=5.0):
    """Independent bisection on x*cos(x) - sin(x)."""
    f = lambda x: x * math.cos(x) - math.sin(x)
    assert f(lo) * f(hi) < 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_j0_zeros_are_exact_multiples_of_pi():
    z = spherical_bessel_zeros(0, 10.0)
    assert np.array_equal(z, np.array([1.0, 2.0, 3.0]) * math.pi)


def test_first_j1_zero_against_bisection_oracle():
    oracle = bisect_j1_zero()
    assert oracle == pytest.approx(FIRST_J1_ZERO, abs=1e-12)
    z = spherical_bessel_zeros(1, 10.0)
    assert z[0] == pytest.approx(FIRST_J1_ZERO, abs=1e-10)


def test_empty_when_no_zero_below_cutoff():
    assert spherical_bessel_zeros(0, 1.0).size == 0
    assert spherical_bessel_zeros(5, 8.0).size == 0


def test_table_interlacing():
    table = build_bessel_zero_table(60.0)
    assert isinstance(table, BesselZeroTable)
    for l in range(table.max_order):
        a, b = table.zeros(l), table.zeros(l + 1)
        m = min(len(a) - 1, len(b))
        assert np.all(b[:m] > a[:m])
        assert np.all(b[:m] < a[1 : m + 1])


def test_table_residuals_under_downward_recurrence_evaluator():
    table = build_bessel_zero_table(60.0)
    for l in range(table.max_order + 1):
        z = table.zeros(l)
        if z.size:
            assert np.max(np.abs(spherical_jl(l, z))) < 1e-10


def test_zero_counts_match_weyl_style_growth():
    # number of zeros of j_l below x is close to (x - l*pi/2)/pi for x >> l
    table = build_bessel_zero_table(120.0)
    for l in (0, 5, 10):
        expect = (120.0 - l * math.pi / 2) / math.pi
        assert abs(len(table.zeros(l)) - expect) <= 2.0


def test_strictly_increasing_within_level():
    # gaps approach pi from above at large x; allow float noise at the limit
    table = build_bessel_zero_table(80.0)
    for l in range(table.max_order + 1):
        z = table.zeros(l)
        assert np.all(np.diff(z) > math.pi * (1.0 - 1e-12))


def test_jl_closed_forms():
    x = np.linspace(0.0, 40.0, 4001)
    assert spherical_jl(0, 0.0) == 1.0
    assert spherical_jl(1, 0.0) == 0.0
    assert spherical_jl(7, 0.0) == 0.0
    with np.errstate(invalid="ignore", divide="ignore"):
        ref0 = np.where(x > 0, np.sin(x) / np.where(x > 0, x, 1.0), 1.0)
    assert np.allclose(spherical_jl(0, x), ref0, atol=1e-15)
    # recurrence identity j_{l+1} = (2l+1)/x j_l - j_{l-1} on the grid interior
    xi = x[x > 1.0]
    for l in (1, 3, 8, 15):
        lhs = spherical_jl(l + 1, xi)
        rhs = (2 * l + 1) / xi * spherical_jl(l, xi) - spherical_jl(l - 1, xi)
        assert np.allclose(lhs, rhs, atol=1e-12)


def test_jl_small_argument_series():
    # j_l(x) ~ x^l / (2l+1)!! for x -> 0
    for l, dfact in ((2, 15.0), (3, 105.0), (4, 945.0)):
        x = np.array([1e-4, 3e-4, 1e-3])
        assert np.allclose(spherical_jl(l, x), x**l / dfact, rtol=1e-6)


def test_jl_against_upward_recurrence_in_oscillatory_zone():
    from cavityrad.bessel import _jl_pair_upward

    rng = np.random.default_rng(3)
    for l in (2, 5, 17, 40):
        x = rng.uniform(l + 2.0, l + 50.0, size=50)
        _, up = _jl_pair_upward(l, x)
        down = spherical_jl(l, x)
        assert np.allclose(up, down, atol=2e-16 + 0 * up, rtol=5e-12)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        spherical_jl(-1, 1.0)
    with pytest.raises(ValueError):
        spherical_jl(2, -0.5)
    with pytest.raises(ValueError):
        spherical_bessel_zeros(2, 0.0)
