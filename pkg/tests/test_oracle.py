"""The validators themselves: report rendering, quadrature convergence, and
threshold-crossing integration order."""

import math

import numpy as np
import pytest

from cavityrad import (
    C_LIGHT,
    HBAR,
    K_B,
    BoundaryCondition,
    FilmGeometry,
    OracleReport,
    QuadratureError,
    RodGeometry,
    film_density,
    planck_density,
    planck_total_energy_density,
    quadrature_total_energy,
    rod_density,
    rod_threshold_frequencies,
)


def test_oracle_report_fields_and_csv():
    r = OracleReport("stefan", 2.0, 2.0 + 2e-10, 1e-9)
    assert r.rel_dev == pytest.approx(1e-10, rel=1e-6)
    assert r.passed
    row = r.csv_row()
    assert row.startswith("stefan,2.0,")
    assert row.endswith(",pass")
    bad = OracleReport("x", 1.0, 1.1, 1e-3)
    assert not bad.passed
    assert bad.csv_row().endswith(",FAIL")


def test_oracle_report_zero_reference():
    r = OracleReport("null", 0.0, 0.0, 1e-12)
    assert r.passed and r.rel_dev == 0.0


def test_quadrature_of_zero_function():
    assert quadrature_total_energy(lambda w: 0.0 * np.asarray(w), 1e14) == 0.0


def test_quadrature_planck_total():
    for T in (3.0, 300.0):
        got = quadrature_total_energy(lambda w: planck_density(w, T),
                               50.0 * K_B * T / HBAR)
        assert got == pytest.approx(planck_total_energy_density(T), rel=1e-9)


def test_quadrature_film_dirichlet_large_plate():
    T = 300.0
    film = FilmGeometry(1e-2)
    omega_cap = 50.0 * K_B * T / HBAR
    # the film integrand jumps at every mode admission, so the composite rule
    # converges at first order; 1e-8 is ample for the half-percent target
    total = quadrature_total_energy(
        lambda w: film_density(w, T, film, BoundaryCondition.DIRICHLET), omega_cap,
        rel_tol=1e-8,
    )
    assert total == pytest.approx(planck_total_energy_density(T), rel=5e-3)


def test_quadrature_rod_across_thresholds():
    # integrate the periodic rod through its first few singularities and
    # compare with a window-free reference from very fine sampling
    rod = RodGeometry(1e-5, 1e-5)
    T = 300.0
    omega_cap = 2.5 * 2.0 * math.pi * C_LIGHT / 1e-5
    th = rod_threshold_frequencies(rod, BoundaryCondition.PERIODIC, omega_cap)
    fn = lambda w: rod_density(w, T, rod, BoundaryCondition.PERIODIC, threshold_guard=0.0)
    total = quadrature_total_energy(fn, omega_cap, thresholds=th, rel_tol=1e-9)
    assert total > 0.0
    # refining further changes nothing beyond the tolerance
    total2 = quadrature_total_energy(fn, omega_cap, 128, thresholds=th, rel_tol=1e-10)
    assert total == pytest.approx(total2, rel=1e-7)


def test_threshold_substitution_convergence_order():
    # midpoint sums in the substituted variable converge with order >= 1
    rod = RodGeometry(1e-5, 1e-5)
    T = 300.0
    th = rod_threshold_frequencies(rod, BoundaryCondition.PERIODIC, 1e15)
    a, b = float(th[0]), float(th[1])
    fn = lambda w: rod_density(w, T, rod, BoundaryCondition.PERIODIC, threshold_guard=0.0)

    def midpoint_subst(n):
        span = math.sqrt(b - a)
        h = span / n
        u = (np.arange(n) + 0.5) * h
        x = a + u * u
        vals = np.array([fn(float(v)) for v in x])
        return float(np.sum(vals * 2.0 * u) * h)

    ref = midpoint_subst(8192)
    errs = [abs(midpoint_subst(n) - ref) for n in (64, 128, 256, 512)]
    orders = [math.log2(e1 / e2) for e1, e2 in zip(errs, errs[1:]) if e2 > 0]
    assert all(o >= 1.0 for o in orders)


def test_quadrature_error_carries_estimates():
    rng = np.random.default_rng(5)
    noisy = lambda w: 1.0 + rng.standard_normal(np.shape(w))
    with pytest.raises(QuadratureError) as err:
        quadrature_total_energy(noisy, 1.0, rel_tol=1e-14, max_panels=512)
    assert math.isfinite(err.value.last) and math.isfinite(err.value.previous)
