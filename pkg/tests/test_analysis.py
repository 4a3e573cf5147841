import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetamap import analysis, wmap
from zetamap.analysis import (
    LocusPoint,
    boundedness_scan,
    critical_line_map,
    find_zeta_zero,
    g_quartic_roots,
    tail_sum,
    taylor_coeffs,
    unit_modulus_crossing,
    zeta_along_locus,
)
from zetamap.errors import DegenerateError, NoBracketError
from zetamap.specfun import LOG_PI, riemann_zeta

import oracles

TWO_PI = 2 * math.pi
KAPPA = 2.01 * math.pi

# Frozen from oracles.sign_scan_crossing (1e-4 pre-scan, product-form |W|).
T_STAR_QUARTER = 6.288172919571
# Frozen from a 30-digit mpmath evaluation at the sigma = 0.25 locus point.
ABS_ZETA_QUARTER = 0.957412890276305
# Known ordinates of the first two zeros on the critical line.
ZERO_1 = 14.134725141734693
ZERO_2 = 21.022039638771555


class TestTaylorCoefficients:
    def test_published_odd_coefficients(self):
        e = taylor_coeffs(KAPPA)
        for order, value in [(1, -1.0095424e-1), (3, 2.5705715e-3), (5, -6.6264219e-5)]:
            assert e.coefficient(order) == pytest.approx(value, rel=1e-4)
        e = taylor_coeffs(TWO_PI)
        for order, value in [(1, -1.0197290e-1), (3, 2.6229847e-3), (5, -6.8327078e-5)]:
            assert e.coefficient(order) == pytest.approx(value, rel=1e-4)

    def test_published_even_coefficients(self):
        e = taylor_coeffs(TWO_PI)
        for order, value in [(0, -4.5746788), (2, -5.0986449e-2), (4, 6.5574618e-4)]:
            assert e.coefficient(order) == pytest.approx(value, rel=1e-4)

    def test_structure(self):
        e = taylor_coeffs(KAPPA, k_max=8)
        assert [p for p, _ in e.coeffs] == list(range(1, 16, 2))
        assert [p for p, _ in e.even_coeffs] == list(range(0, 15, 2))
        assert e.tail_bound >= 0
        assert e.k_max == 8

    def test_first_coefficient_is_second_derivative(self):
        for t in (TWO_PI, KAPPA, 11.0):
            c1 = taylor_coeffs(t).coefficient(1)
            assert wmap.d2g_dsigma2(complex(0.5, t)) == pytest.approx(c1, rel=1e-8)

    @pytest.mark.parametrize("t", [TWO_PI, KAPPA])
    def test_even_expansion_reproduces_g(self, t):
        e = taylor_coeffs(t, k_max=8)
        for delta in np.linspace(-0.5, 0.5, 41):
            assert e.g(delta) == pytest.approx(wmap.g_function(complex(0.5 + delta, t)), abs=1e-8)

    @pytest.mark.parametrize("t", [TWO_PI, KAPPA])
    def test_odd_expansion_reproduces_dg(self, t):
        e = taylor_coeffs(t, k_max=8)
        for delta in np.linspace(-0.5, 0.5, 41):
            assert e.dg(delta) == pytest.approx(wmap.dg_dsigma(complex(0.5 + delta, t)), abs=1e-8)

    def test_coefficients_from_direct_polygamma_oracle(self):
        a = 0.25 + 1j * KAPPA / 2
        for k in (1, 2, 3):
            psi = oracles.polygamma_direct(2 * k, a)
            expected = -2 * psi.real / (math.factorial(2 * k - 1) * 2 ** (2 * k - 1))
            assert analysis.odd_coefficient(KAPPA, k) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("kw", [{"t": 0.0}, {"t": 1.0, "k_max": 2}, {"t": 1.0, "k_max": 13}])
    def test_rejects(self, kw):
        with pytest.raises(ValueError):
            taylor_coeffs(**kw)


class TestTailSum:
    def test_published(self):
        assert tail_sum(KAPPA, 4, 20) == pytest.approx(1.824122120e-6, abs=1e-9)
        assert tail_sum(TWO_PI, 4, 20) == pytest.approx(1.904573728e-6, abs=1e-9)

    def test_dominance(self):
        assert abs(taylor_coeffs(KAPPA).coefficient(5)) > tail_sum(KAPPA, 4, 40)
        assert abs(taylor_coeffs(TWO_PI).coefficient(5)) > tail_sum(TWO_PI, 4, 40)

    def test_single_term(self):
        assert tail_sum(KAPPA, 4, 4) == abs(analysis.odd_coefficient(KAPPA, 4))

    def test_monotone(self):
        sums = [tail_sum(TWO_PI, 4, k) for k in range(4, 41)]
        assert all(b >= a for a, b in zip(sums, sums[1:]))

    def test_bound_matches_long_sum(self):
        e = taylor_coeffs(KAPPA)
        assert e.tail_bound == pytest.approx(tail_sum(KAPPA, 4, 40), rel=0.01)

    @pytest.mark.parametrize("lo,hi", [(3, 10), (5, 4), (4, 41)])
    def test_range_checked(self, lo, hi):
        with pytest.raises(ValueError):
            tail_sum(KAPPA, lo, hi)


class TestQuarticRoots:
    def test_published(self):
        lo, hi = g_quartic_roots(TWO_PI)
        assert hi == pytest.approx(0.2885526325, abs=1e-6)
        assert lo == -hi

    def test_residual(self):
        e = taylor_coeffs(TWO_PI)
        _, d = g_quartic_roots(TWO_PI)
        g0, g2, g4 = (e.coefficient(k) for k in (0, 2, 4))
        assert abs(4 * LOG_PI + g0 + g2 * d**2 + g4 * d**4) <= 1e-12

    def test_no_root(self):
        from zetamap.errors import NoRootError

        # at t = 2.01 pi, G(1/2) < 0 already, so the quartic has no root in range
        with pytest.raises(NoRootError):
            g_quartic_roots(KAPPA)


class TestCrossing:
    def test_sigma_zero_in_band(self):
        p = unit_modulus_crossing(0.0, TWO_PI, KAPPA)
        assert TWO_PI < p.t_star < KAPPA
        assert p.residual <= 1e-10
        assert p.bracket_lo <= p.t_star <= p.bracket_hi
        assert p.bracket_hi - p.bracket_lo < 1e-12

    def test_quarter_golden(self):
        p = unit_modulus_crossing(0.25, 6.2, 6.4)
        assert p.t_star == pytest.approx(T_STAR_QUARTER, abs=1e-10)

    def test_quarter_oracle(self):
        assert oracles.sign_scan_crossing(0.25, 6.28, 6.3) == pytest.approx(T_STAR_QUARTER, abs=1e-10)

    def test_degenerate(self):
        with pytest.raises(DegenerateError):
            unit_modulus_crossing(0.5, 1.0, 10.0)

    def test_no_bracket(self):
        with pytest.raises(NoBracketError):
            unit_modulus_crossing(0.2, 1.0, 6.0)

    def test_mirror_sigma_same_crossing(self):
        a = unit_modulus_crossing(0.1, TWO_PI, KAPPA)
        b = unit_modulus_crossing(0.9, TWO_PI, KAPPA)
        assert a.t_star == pytest.approx(b.t_star, abs=1e-11)


@pytest.fixture(scope="module")
def report():
    return boundedness_scan(analysis.default_sigma_grid(0.05), 50.0)


class TestScan:
    def test_one_crossing_each_in_band(self, report):
        assert report.ok, report.findings
        assert len(report.entries) == 20
        for e in report.entries:
            assert len(e.crossings) == 1
            assert TWO_PI < e.crossings[0].t_star < KAPPA
            assert e.crossings[0].residual <= 1e-10

    def test_half_skipped_with_note(self, report):
        assert [s["sigma"] for s in report.skipped] == [0.5]
        assert "note" in report.skipped[0]

    def test_entries_ordered(self, report):
        sig = [e.sigma for e in report.entries]
        assert sig == sorted(sig)

    def test_no_crossing_below_two_pi(self):
        report = boundedness_scan([0.0, 0.1, 0.4, 0.6, 1.0], TWO_PI - 1e-3)
        assert {f.kind for f in report.findings} == {"no_crossing"}
        assert len(report.findings) == 5

    def test_band_violation_is_a_finding(self):
        report = boundedness_scan([0.2], 50.0, band=(6.0, 6.2))
        assert [f.kind for f in report.findings] == ["outside_band"]
        assert report.findings[0].t == pytest.approx(report.entries[0].crossings[0].t_star)

    def test_worker_count_does_not_change_result(self):
        grid = [0.0, 0.3, 0.7, 1.0]
        a = boundedness_scan(grid, 10.0, workers=1).to_dict()
        b = boundedness_scan(grid, 10.0, workers=4).to_dict()
        assert a == b


class TestCriticalLine:
    def test_unit_circle(self):
        m = critical_line_map(-100, 100, 8000)
        assert m.shape == (8000, 3)
        assert np.max(np.abs(m[:, 1] ** 2 + m[:, 2] ** 2 - 1)) <= 1e-10

    def test_origin_maps_to_one(self):
        m = critical_line_map(-1, 1, 3)
        assert tuple(m[1]) == (0.0, 1.0, 0.0)

    def test_two_pi_point(self):
        _, u, v = critical_line_map(TWO_PI, TWO_PI + 1, 2)[0]
        assert u * u + v * v == pytest.approx(1, abs=1e-12)

    def test_requires_two_points(self):
        with pytest.raises(ValueError):
            critical_line_map(0, 1, 1)


class TestZetaAlongLocus:
    def test_equal_moduli_and_positive(self):
        locus = [unit_modulus_crossing(s, TWO_PI, KAPPA) for s in (0.0, 0.25, 0.7, 1.0)]
        for row in zeta_along_locus(locus):
            assert row.abs_zeta_s > 0 and row.abs_zeta_1ms > 0
            assert row.abs_zeta_s / row.abs_zeta_1ms == pytest.approx(1, abs=1e-8)

    def test_quarter_golden(self):
        p = unit_modulus_crossing(0.25, TWO_PI, KAPPA)
        (row,) = zeta_along_locus([p])
        assert row.abs_zeta_s == pytest.approx(ABS_ZETA_QUARTER, rel=1e-8)
        assert row.abs_zeta_1ms == pytest.approx(ABS_ZETA_QUARTER, rel=1e-8)


class TestZetaZeros:
    @pytest.mark.parametrize("lo,hi,expected", [(14.0, 14.2, ZERO_1), (20.9, 21.1, ZERO_2)])
    def test_zeros(self, lo, hi, expected):
        t = find_zeta_zero(lo, hi)
        assert t == pytest.approx(expected, abs=1e-9)
        assert abs(riemann_zeta(complex(0.5, t))) <= 1e-8
        assert abs(wmap.w_abs(complex(0.5, t)) - 1) <= 1e-12

    def test_hardy_z_is_real_valued(self):
        for t in (5.0, 14.13, 30.0):
            phase = wmap.log_w(complex(0.5, t)).imag
            z = riemann_zeta(complex(0.5, t)) * complex(math.cos(phase / 2), -math.sin(phase / 2))
            assert abs(z.imag) <= 1e-10 * max(1, abs(z))

    def test_no_bracket(self):
        with pytest.raises(NoBracketError):
            find_zeta_zero(15.0, 16.0)
        with pytest.raises(NoBracketError):
            find_zeta_zero(14.0, 22.0)


class TestFigures:
    def test_fig2(self):
        d = analysis.fig2_data()
        assert d.shape == (201, 3)
        assert d[0, 0] == 0 and d[-1, 0] == 1
        assert d[0, 1] < 1 < d[0, 2]

    def test_fig3(self):
        d = analysis.fig3_data()
        assert d.shape == (8000, 3)
        i = int(np.nonzero(d[:, 0] == 0)[0][0])
        assert tuple(d[i]) == (0.0, 1.0, 0.0)

    def test_fig4(self):
        d = analysis.fig4_data()
        assert d.shape == (20, 4)
        assert 0.5 not in d[:, 0]
        assert np.allclose(d[:, 2], d[:, 3], rtol=1e-8, atol=0)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0).filter(lambda x: abs(x - 0.5) > 1e-3))
def test_crossing_in_band_property(sigma):
    p = unit_modulus_crossing(sigma, TWO_PI, KAPPA, check_points=10)
    assert TWO_PI < p.t_star < KAPPA
    assert isinstance(p, LocusPoint)
