"""Curvature engine: forms from evaluators, curvature formulas, Euler
theorems, and the statistical moments of the normal curvature."""

import math

import numpy as np
import pytest

from minkrev.curvature import (
    CurvatureTriple,
    FundamentalForms,
    PrincipalData,
    curvatures_from_forms,
    euler_normal_curvature,
    forms_at,
    principal_curvatures,
    spacelike_moments,
    timelike_gaussian_moments,
)
from minkrev.errors import (
    DegenerateMetric,
    InvalidParameter,
    LightlikeTangentPlane,
)
from minkrev.minkowski import AxisType, rotation


def diag_forms(g11, g22, h11, h22, eps):
    return FundamentalForms(g11, 0.0, g22, h11, 0.0, h22, eps)


class TestFormsAt:
    def test_spacelike_plane_flat(self):
        f = forms_at(lambda u, t: (u, t, 0.0), 0.3, 0.7, h=1e-4)
        assert f.epsilon == -1
        assert abs(f.g11 - 1) < 1e-10 and abs(f.g22 - 1) < 1e-10
        assert max(abs(f.h11), abs(f.h12), abs(f.h22)) < 1e-8

    def test_timelike_cylinder(self):
        r = 1.5

        def cyl(u, t):
            return (r * math.cos(t), r * math.sin(t), u)

        f = forms_at(cyl, 0.2, 1.1, h=1e-4)
        c = curvatures_from_forms(f)
        assert f.epsilon == 1
        assert abs(c.K) < 1e-6
        assert abs(abs(c.H) - 1 / (2 * r)) < 1e-6

    def test_hyperbolic_plane_sheet(self):
        r = 1.0

        def sheet(u, t):
            return (u * np.cos(t), u * np.sin(t), np.sqrt(r * r + u * u))

        f = forms_at(sheet, 0.8, 0.5, h=1e-4)
        c = curvatures_from_forms(f)
        assert f.epsilon == -1
        assert abs(c.H - (-1 / r)) < 1e-5
        assert abs(c.K - (-1 / (r * r))) < 1e-5
        assert abs(c.S) < 1e-5

    def test_lightlike_tangent_plane_rejected(self):
        # The light cone z = sqrt(x^2 + y^2) has a null tangent plane.
        def cone(u, t):
            return (u * math.cos(t), u * math.sin(t), u)

        with pytest.raises(LightlikeTangentPlane):
            forms_at(cone, 1.0, 0.3, h=1e-3)

    def test_fd_step_convergence_order_two(self):
        r = 1.5

        def cyl(u, t):
            return (r * math.cos(t), r * math.sin(t), u)

        errs = []
        for h in (2e-3, 1e-3):
            c = curvatures_from_forms(forms_at(cyl, 0.0, 0.9, h=h))
            errs.append(abs(abs(c.H) - 1 / (2 * r)))
        assert errs[0] / errs[1] >= 3.5

    @pytest.mark.parametrize("axis", list(AxisType))
    def test_isometry_invariance(self, axis):
        def sheet(u, t):
            return (u * np.cos(t), u * np.sin(t), np.sqrt(1.0 + u * u))

        rot = rotation(axis, 0.6)

        def moved(u, t):
            return rot @ np.asarray(sheet(u, t))

        # Truncation error transforms covariantly and cancels in the
        # comparison; h large enough to keep second-difference roundoff
        # below the tolerance.
        for u, t in [(0.7, 0.2), (1.1, 1.9)]:
            c0 = curvatures_from_forms(forms_at(sheet, u, t, h=1e-3))
            c1 = curvatures_from_forms(forms_at(moved, u, t, h=1e-3))
            assert abs(c0.H - c1.H) < 1e-8
            assert abs(c0.K - c1.K) < 1e-8
            assert abs(c0.S - c1.S) < 1e-8


class TestCurvaturesFromForms:
    def test_umbilic(self):
        k = 0.7
        c = curvatures_from_forms(diag_forms(1, 1, k, k, -1))
        assert c.H == pytest.approx(-k)
        assert c.K == pytest.approx(-k * k)
        assert c.discriminant == pytest.approx(0.0, abs=1e-15)
        assert c.S == pytest.approx(0.0, abs=1e-8)

    def test_plugged_values(self):
        c = curvatures_from_forms(diag_forms(1, 1, 1, 3, -1))
        assert c.H == pytest.approx(-2.0)
        assert c.K == pytest.approx(-3.0)
        assert c.discriminant == pytest.approx(1.0)
        assert c.S == pytest.approx(1.0)

    def test_degenerate_metric(self):
        with pytest.raises(DegenerateMetric):
            FundamentalForms(1.0, 1.0, 1.0, 0.0, 0.0, 0.0, -1)

    def test_epsilon_consistency_enforced(self):
        with pytest.raises(InvalidParameter):
            FundamentalForms(1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1)

    def test_imaginary_skew_flagged(self):
        # Non-diagonal timelike case with H^2 - eps K < 0.
        f = FundamentalForms(1.0, 0.0, -1.0, 0.0, 1.0, 0.0, 1)
        c = curvatures_from_forms(f)
        assert c.discriminant < 0
        assert c.s_imaginary
        assert math.isnan(c.S)


class TestPrincipalCurvatures:
    def test_diagonal_division(self):
        pd = principal_curvatures(diag_forms(1, -1, 2, 1, 1))
        assert pd.kappa1 == pytest.approx(2.0)
        assert pd.kappa2 == pytest.approx(-1.0)
        assert pd.spacelike_eigendirection_first

    def test_umbilic_zero_skew(self):
        f = diag_forms(1, 1, 5, 5, -1)
        pd = principal_curvatures(f)
        c = curvatures_from_forms(f)
        assert pd.kappa1 == pytest.approx(pd.kappa2)
        assert c.S == pytest.approx(0.0, abs=1e-10)

    def test_discriminant_identity_random(self):
        rng = np.random.default_rng(7)
        checked = 0
        while checked < 1000:
            g11, g22 = rng.uniform(0.5, 2.0), rng.uniform(-2.0, 2.0)
            if abs(g22) < 0.1:
                continue
            h11, h22 = rng.uniform(-2.0, 2.0, size=2)
            eps = -1 if g11 * g22 > 0 else 1
            f = diag_forms(g11, g22, h11, h22, eps)
            pd = principal_curvatures(f)
            c = curvatures_from_forms(f)
            lhs = (pd.kappa1 - pd.kappa2) ** 2
            rhs = 4.0 * c.discriminant
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))
            # Skew recomposition per the operational definition
            # S = sqrt(H^2 - eps K): S = |k1 - k2| / 2, 2H = eps (k1 + k2).
            if c.discriminant >= 0:
                assert abs(2.0 * c.S - abs(pd.kappa1 - pd.kappa2)) <= 1e-10 * max(1.0, c.S)
            assert abs(2 * c.H - eps * (pd.kappa1 + pd.kappa2)) <= 1e-10
            checked += 1


class TestEulerTheorem:
    def test_spacelike_equal_weights(self):
        pd = PrincipalData(2.0, 4.0, True)
        assert euler_normal_curvature(pd, "spacelike", math.pi / 4) == pytest.approx(3.0)

    def test_spacelike_principal_direction(self):
        pd = PrincipalData(2.0, 4.0, True)
        assert euler_normal_curvature(pd, "spacelike", 0.0) == pytest.approx(2.0)

    def test_timelike_unit_spacelike_branch(self):
        pd = PrincipalData(1.0, 2.0, True)
        got = euler_normal_curvature(pd, "timelike", 1.0, "unit_spacelike")
        assert got == pytest.approx(-0.381097845541816, abs=1e-12)

    def test_timelike_unit_timelike_branch(self):
        pd = PrincipalData(1.0, 2.0, True)
        got = euler_normal_curvature(pd, "timelike", 0.5, "unit_timelike")
        assert got == pytest.approx(
            math.sinh(0.5) ** 2 * 1.0 - math.cosh(0.5) ** 2 * 2.0
        )

    def test_flag_swaps_roles(self):
        a = euler_normal_curvature(PrincipalData(1.0, 2.0, True), "timelike", 0.7)
        b = euler_normal_curvature(PrincipalData(2.0, 1.0, False), "timelike", 0.7)
        assert a == pytest.approx(b)


class TestSpacelikeMoments:
    def test_closed_relations(self):
        mu, sigma = spacelike_moments(PrincipalData(2.0, 4.0, True))
        assert mu == pytest.approx(3.0, abs=1e-12)
        assert sigma == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-12)
        # H = -mu and S = 2 sqrt(2) sigma on a spacelike surface.
        assert -mu == pytest.approx(-3.0)
        assert 2.0 * math.sqrt(2.0) * sigma == pytest.approx(2.0, abs=1e-12)

    def test_umbilic(self):
        mu, sigma = spacelike_moments(PrincipalData(5.0, 5.0, True))
        assert mu == pytest.approx(5.0, abs=1e-12)
        assert sigma == pytest.approx(0.0, abs=1e-12)

    def test_quadrature_matches_closed_form(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            k1, k2 = rng.uniform(-3, 3, size=2)
            mu, sigma = spacelike_moments(PrincipalData(k1, k2, True))
            assert abs(mu - (k1 + k2) / 2) <= 1e-12
            assert abs(sigma - abs(k1 - k2) / (2 * math.sqrt(2))) <= 1e-12


class TestTimelikeGaussianMoments:
    def test_closed_form_value(self):
        gm = timelike_gaussian_moments(PrincipalData(1.0, 0.0, True), 0.1)
        assert gm.mean_closed == pytest.approx((math.exp(0.02) + 1.0) / 2.0, abs=1e-15)
        assert gm.mean_closed == pytest.approx(1.0101006700133779, abs=1e-12)

    def test_umbilic_exact(self):
        c = 1.3
        gm = timelike_gaussian_moments(PrincipalData(c, c, True), 0.37)
        assert gm.mean_a == pytest.approx(c, abs=1e-10)

    @pytest.mark.parametrize("a", [0.05, 0.1, 0.2])
    def test_quadrature_matches_closed_form(self, a):
        gm = timelike_gaussian_moments(PrincipalData(1.4, -0.6, True), a)
        assert abs(gm.mean_a - gm.mean_closed) <= 1e-9

    def test_invalid_width(self):
        with pytest.raises(InvalidParameter):
            timelike_gaussian_moments(PrincipalData(1.0, 2.0, True), 0.0)

    def test_small_a_limit_tends_to_kappa1(self):
        # The a -> 0 limit of the closed form is k1, not (k1 + k2)/2; the
        # discrepancy is reported by the acceptance suite, not asserted.
        k1, k2 = 1.0, 0.25
        gm = timelike_gaussian_moments(PrincipalData(k1, k2, True), 0.01)
        assert abs(gm.mean_closed - k1) < 1e-3
