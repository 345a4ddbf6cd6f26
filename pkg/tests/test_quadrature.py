import math

import pytest

from clamm import (
    ConvergenceFailure,
    DomainError,
    IntegralSpec,
    PoolState,
    ReferenceParams,
    SwapDelta,
    adaptive_simpson,
    curve_for,
    integrate_price_curve,
    oracle_compare,
    run_battery,
)
from clamm.quadrature import random_cases

from .conftest import WORKED_BANCOR, assert_rel


class TestIntegralSpec:
    def test_rejects_reversed_bounds(self):
        with pytest.raises(DomainError):
            IntegralSpec(2.0, 1.0)

    def test_rejects_zero_width(self):
        with pytest.raises(DomainError):
            IntegralSpec(1.0, 1.0)

    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(DomainError):
            IntegralSpec(0.0, 1.0, abs_tol=0.0)


class TestAdaptiveSimpson:
    def test_polynomial_is_exact(self):
        value = adaptive_simpson(lambda x: x * x * x, IntegralSpec(0.0, 2.0))
        assert_rel(value, 4.0, rel=1e-12)

    def test_smooth_transcendental(self):
        value = adaptive_simpson(math.exp, IntegralSpec(0.0, 1.0, abs_tol=1e-12))
        assert_rel(value, math.e - 1.0, rel=1e-11)

    def test_depth_exhaustion_raises(self):
        with pytest.raises(ConvergenceFailure):
            adaptive_simpson(lambda x: 1.0 / x, IntegralSpec(1e-6, 1.0, abs_tol=1e-12, max_depth=3))

    def test_halving_tolerance_is_conservative(self):
        f = lambda x: 1.0 / (x * x)
        tol = 1e-6
        for _ in range(6):
            coarse = adaptive_simpson(f, IntegralSpec(1.0, 50.0, abs_tol=tol))
            fine = adaptive_simpson(f, IntegralSpec(1.0, 50.0, abs_tol=tol / 2.0))
            assert abs(coarse - fine) <= tol
            tol /= 2.0


class TestIntegratePriceCurve:
    def test_reference_interval(self):
        curve = curve_for(ReferenceParams(100.0, 100.0))
        dy = integrate_price_curve(curve, 100.0, 200.0, abs_tol=1e-10)
        assert_rel(dy, -50.0, rel=1e-8)

    def test_zero_width_interval(self):
        assert integrate_price_curve(WORKED_BANCOR, 100.0, 100.0) == 0.0

    def test_full_depletion_interval(self):
        dy = integrate_price_curve(WORKED_BANCOR, 100.0, 300.0, abs_tol=1e-10)
        assert_rel(dy, -100.0, rel=1e-8)

    def test_reversed_interval_flips_sign(self):
        forward = integrate_price_curve(WORKED_BANCOR, 100.0, 200.0)
        backward = integrate_price_curve(WORKED_BANCOR, 200.0, 100.0)
        assert_rel(backward, -forward, rel=1e-12)

    def test_interval_outside_range_rejected(self):
        with pytest.raises(DomainError):
            integrate_price_curve(WORKED_BANCOR, 100.0, 301.0)

    def test_dual_axis_reproduces_dx(self, bancor_curve):
        # same routine, axes swapped: integrate dx/dy over the y move
        state = PoolState(100.0, 100.0)
        delta = bancor_curve.swap_exact_in_x(state, 100.0)
        spec = IntegralSpec(state.y + delta.dy, state.y, abs_tol=1e-10)
        dx = -adaptive_simpson(bancor_curve.price_slope_at_y, spec)
        assert_rel(dx, delta.dx, rel=1e-8)

    def test_consumes_only_the_slope_callback(self, bancor_curve):
        class SlopeOnly:
            def __init__(self):
                self.geom = bancor_curve.geom
                self.price_slope_at_x = bancor_curve.price_slope_at_x

            def swap_exact_in_x(self, state, dx):
                raise AssertionError("oracle must not consult the swap formula")

        dy = integrate_price_curve(SlopeOnly(), 100.0, 200.0)
        assert_rel(dy, -200.0 / 3.0, rel=1e-8)


class TestOracleCompare:
    def test_worked_curve_passes(self, bancor_curve):
        report = oracle_compare(bancor_curve, PoolState(100, 100), 100.0)
        assert report.passed
        assert report.rel_deviation < 1e-10
        assert_rel(report.closed_form_dy, -200.0 / 3.0)

    def test_corrupted_closed_form_detected(self, bancor_curve):
        class Corrupted:
            def __init__(self):
                self.geom = bancor_curve.geom
                self.price_slope_at_x = bancor_curve.price_slope_at_x

            def swap_exact_in_x(self, state, dx):
                honest = bancor_curve.swap_exact_in_x(state, dx)
                return SwapDelta(honest.dx, honest.dy + 1e-3)

        report = oracle_compare(Corrupted(), PoolState(100, 100), 100.0)
        assert not report.passed
        assert report.rel_deviation > 1e-8

    def test_three_forms_of_the_worked_curve(self, bancor_curve, uniswap_curve, carbon_curve):
        for curve in (bancor_curve, uniswap_curve, carbon_curve):
            report = oracle_compare(curve, PoolState(100, 100), 100.0)
            assert report.passed
            assert report.rel_deviation < 1e-10


class TestBattery:
    def test_thousand_reference_cases(self, rng):
        # the unshifted curve admits any trade size, so sweep widely
        for _ in range(1000):
            x0 = 10.0 ** rng.uniform(-2.0, 6.0)
            y0 = 10.0 ** rng.uniform(-2.0, 6.0)
            curve = curve_for(ReferenceParams(x0, y0))
            x = x0 * 10.0 ** rng.uniform(-1.0, 1.0)
            state = curve.state_from_x(x)
            report = oracle_compare(curve, state, rng.uniform(0.01, 5.0) * x)
            assert report.passed

    def test_cases_are_deterministic(self):
        assert random_cases(7, 8) == random_cases(7, 8)

    def test_small_battery_passes(self):
        reports = run_battery(seed=3, cases=40)
        assert len(reports) == 40
        assert all(r.passed for r in reports)
        assert max(r.rel_deviation for r in reports) < 1e-9

    def test_battery_covers_every_integrand_form(self):
        forms = {params.form for params, _, _ in random_cases(0, 8)}
        assert forms == {"reference", "bancor_v2", "uniswap_v3", "carbon"}
