"""Tests for the bump family, its exponent functions, and branch conventions."""

import cmath
import math

import numpy as np
import pytest

from bumpft import (
    BumpParams,
    eval_bump,
    exponent_exact,
    exponent_truncated,
    principal_power,
)

CANON = BumpParams.canonical()


class TestBumpParams:
    def test_canonical(self):
        assert CANON.alpha == 2.0
        assert CANON.beta == 1.0

    @pytest.mark.parametrize("alpha", [1.0, 0.5, 0.0, -3.0, math.nan, math.inf])
    def test_alpha_must_exceed_one(self, alpha):
        with pytest.raises(ValueError):
            BumpParams(alpha=alpha, beta=1.0)

    @pytest.mark.parametrize("beta", [0.0, -1.0, math.nan])
    def test_beta_must_be_positive(self, beta):
        with pytest.raises(ValueError):
            BumpParams(alpha=2.0, beta=beta)

    def test_non_integer_alpha_allowed(self):
        BumpParams(alpha=1.25, beta=0.3)


class TestEvalBump:
    def test_center_value(self):
        assert math.isclose(eval_bump(CANON, 0.0), math.exp(-1.0), rel_tol=1e-15)

    def test_half_point(self):
        assert math.isclose(eval_bump(CANON, 0.5), math.exp(-4.0 / 3.0), rel_tol=1e-14)

    def test_general_params(self):
        val = eval_bump(BumpParams(3.0, 2.0), 0.5)
        assert math.isclose(val, math.exp(-2.0 / 0.5625), rel_tol=1e-14)

    @pytest.mark.parametrize("x", [1.0, -1.0, 1.5, -2.0, 37.0, 1e300])
    def test_support_boundary_exact_zero(self, x):
        assert eval_bump(CANON, x) == 0.0

    def test_evenness_exact(self):
        rng = np.random.default_rng(7)
        for x in rng.uniform(0.0, 1.2, size=200):
            assert eval_bump(CANON, x) == eval_bump(CANON, -x)

    def test_range(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(-1.0, 1.0, size=200):
            v = eval_bump(CANON, float(x))
            assert 0.0 <= v < 1.0

    def test_monotone_in_beta(self):
        for x in [0.0, 0.3, 0.9]:
            vals = [eval_bump(BumpParams(2.0, b), x) for b in (0.5, 1.0, 2.0, 5.0)]
            assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_underflow_safety_near_edge(self):
        # inner exponent far beyond exp underflow: result must be an exact 0.0
        for x in [1.0 - 1e-12, 1.0 - 1e-15, math.nextafter(1.0, 0.0)]:
            assert eval_bump(CANON, x) == 0.0
        # high beta pushes the underflow point inward
        assert eval_bump(BumpParams(2.0, 800.0), 0.5) == 0.0

    def test_no_exception_across_edge_scan(self):
        for x in np.linspace(0.99, 1.01, 2001):
            eval_bump(CANON, float(x))


class TestPrincipalPower:
    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            principal_power(0.0, 0.5)

    def test_inverse_ik_root_in_right_half_plane(self):
        # (1/(ik))^(1/alpha) must have argument -pi/(2 alpha), hence Re > 0
        for alpha in [1.001, 1.5, 2.0, 3.0, 4.5, 6.0]:
            for k in [1.0, 10.0, 123.0, 1e4]:
                z = principal_power(1.0 / (1j * k), 1.0 / alpha)
                assert z.real > 0.0
                assert math.isclose(
                    cmath.phase(z), -math.pi / (2.0 * alpha), abs_tol=1e-12
                )

    def test_sqrt_2i_identity(self):
        assert cmath.isclose(principal_power(2j, 0.5), 1.0 + 1.0j, rel_tol=1e-15)


class TestExponentExact:
    def test_real_point_k_zero(self):
        g = exponent_exact(CANON, 0.0, 0.5)
        assert cmath.isclose(g, complex(-4.0 / 3.0, 0.0), rel_tol=1e-14)

    def test_real_point_with_frequency(self):
        g = exponent_exact(CANON, 10.0, 0.5)
        assert cmath.isclose(g, complex(-4.0 / 3.0, 5.0), rel_tol=1e-14)

    @pytest.mark.parametrize("params", [CANON, BumpParams(3.0, 2.0), BumpParams(1.5, 0.7)])
    def test_consistency_with_eval_bump(self, params):
        # exp(g(t)) = f(1-t) exp(ik(1-t)) on the real segment t in (0,1)
        rng = np.random.default_rng(3)
        for k in [0.0, 1.0, 17.0]:
            for t in rng.uniform(0.02, 0.98, size=20):
                t = float(t)
                lhs = cmath.exp(exponent_exact(params, k, t))
                rhs = eval_bump(params, 1.0 - t) * cmath.exp(1j * k * (1.0 - t))
                assert abs(lhs - rhs) <= 1e-13 * abs(rhs)

    @pytest.mark.parametrize("t", [0.0, 2.0, -0.5, -1e-9, complex(-0.1, 0.5)])
    def test_domain_errors(self, t):
        with pytest.raises(ValueError):
            exponent_exact(CANON, 1.0, t)


class TestExponentTruncated:
    def test_basic_value(self):
        g = exponent_truncated(CANON, 0.0, 0.5)
        assert cmath.isclose(g, complex(-1.0, 0.0), rel_tol=1e-14)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            exponent_truncated(CANON, 1.0, 0.0)

    def test_constant_variant_only_for_alpha_two(self):
        g = exponent_truncated(CANON, 0.0, 0.5, with_constant=True)
        assert cmath.isclose(g, complex(-1.25, 0.0), rel_tol=1e-14)
        with pytest.raises(ValueError):
            exponent_truncated(BumpParams(3.0, 1.0), 0.0, 0.5, with_constant=True)

    @pytest.mark.parametrize("alpha", [2.0, 2.5, 3.0])
    def test_truncation_error_order(self, alpha):
        # |exact - truncated| = O(t^(2-alpha)) along the saddle ray:
        # halving t multiplies the difference by 2^(alpha-2)
        params = BumpParams(alpha, 1.0)
        ray = cmath.exp(-1j * math.pi / (2.0 * alpha))
        k = 5.0
        t = 1e-3 * ray
        diffs = []
        for _ in range(4):
            diffs.append(abs(exponent_exact(params, k, t) - exponent_truncated(params, k, t)))
            t /= 2.0
        expected_ratio = 2.0 ** (alpha - 2.0)
        for lo, hi in zip(diffs[1:], diffs[:-1]):
            assert math.isclose(lo / hi, expected_ratio, rel_tol=2e-3)

    def test_constant_variant_leaves_linear_remainder(self):
        # for alpha=2 the exact exponent minus (truncated - 1/4) vanishes like O(t)
        ray = cmath.exp(-1j * math.pi / 4.0)
        t = 1e-4 * ray
        diffs = []
        for _ in range(4):
            d = exponent_exact(CANON, 3.0, t) - exponent_truncated(CANON, 3.0, t, with_constant=True)
            diffs.append(abs(d))
            t /= 2.0
        for lo, hi in zip(diffs[1:], diffs[:-1]):
            assert math.isclose(lo / hi, 0.5, rel_tol=1e-3)
