from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sascone import (
    BoxViolationError,
    BracketFailureError,
    InvalidParameterError,
    MetricProfile,
    NotFanoError,
    ProductCaseError,
    ProfileParams,
    ProfileSample,
    ReebRay,
    build_profile,
    f_of_k,
    g_dt,
    g_func,
    profile_F,
    profile_params_from_ray,
    ricci_box_check,
    ricci_box_holds,
    ricci_coefficients,
    sasaki_lift_check,
    solve_k,
    validate_join,
    weight_poly,
)
from conftest import CP1, GENUS2
from oracles import g_raw, quad_f, quad_profile_F, sign_changes

ASYM = ProfileParams(m1=3, m2=2, d_n=1, r=-0.5, n=-4, fano_index=2)
SYM = ProfileParams(m1=1, m2=1, d_n=0, r=0.5, n=1, fano_index=1)

# 30-digit evaluation of 4*(1 - coth(1)), the symmetric m1=m2=1, d_n=0 value
F_OF_ONE_SYMMETRIC = -1.2521411419973252


class TestTransitionFunction:
    @pytest.mark.parametrize("k", [0.0, 1e-12, 1e-6, 0.3, 1.0, -2.5, 17.0, -40.0, 300.0])
    def test_endpoint_values_for_every_k(self, k):
        assert g_func(-1.0, k, 3, 2) == pytest.approx(1.0, abs=1e-14)
        assert g_func(1.0, k, 3, 2) == pytest.approx(-2.0 / 3.0, abs=1e-14)

    def test_zero_at_origin_symmetric(self):
        assert g_func(0.0, 0.0, 1, 1) == 0.0

    def test_continuous_across_k_zero(self):
        for t in (-0.9, -0.2, 0.4, 0.8):
            for k in (1e-9, -1e-9):
                assert g_func(t, k, 4, 7) == pytest.approx(g_func(t, 0.0, 4, 7), abs=1e-8)

    @pytest.mark.parametrize("k", [1e-3, 0.2, 1.0, -4.0, 12.0])
    def test_matches_raw_formula(self, k):
        for t in (-1.0, -0.6, 0.0, 0.3, 1.0):
            assert g_func(t, k, 5, 2) == pytest.approx(g_raw(t, k, 5, 2), rel=1e-12, abs=1e-14)

    @given(
        t=st.floats(-1, 1, allow_nan=False),
        k=st.floats(-50, 50, allow_nan=False),
        m1=st.integers(1, 9),
        m2=st.integers(1, 9),
    )
    @settings(max_examples=400)
    def test_derivative_always_negative(self, t, k, m1, m2):
        assert g_dt(t, k, m1, m2) < 0.0

    def test_derivative_matches_finite_difference(self):
        h = 1e-6
        for k in (0.0, 0.7, -3.0):
            for t in (-0.8, 0.1, 0.6):
                fd = (g_func(t + h, k, 3, 2) - g_func(t - h, k, 3, 2)) / (2 * h)
                assert g_dt(t, k, 3, 2) == pytest.approx(fd, rel=1e-7, abs=1e-9)


class TestRootFunction:
    def test_odd_integrand_vanishes_at_zero(self):
        assert f_of_k(0.0, SYM) == 0.0

    def test_symmetric_value_at_one(self):
        got = f_of_k(1.0, SYM)
        assert got == pytest.approx(F_OF_ONE_SYMMETRIC, abs=5e-15)
        assert got == pytest.approx(quad_f(1.0, 1, 1, 0.5, 0), abs=1e-12)

    def test_limit_signs(self):
        for params in (SYM, ASYM, ProfileParams(9, 1, 4, 0.9, 3, 1)):
            assert f_of_k(60.0, params) < 0.0
            assert f_of_k(-60.0, params) > 0.0

    def test_series_and_closed_form_agree_at_cutoff(self):
        for params in (ASYM, ProfileParams(7, 2, 3, -0.8, -5, 2)):
            below = f_of_k(math.nextafter(0.5, 0.0), params)
            at = f_of_k(0.5, params)
            assert below == pytest.approx(at, rel=1e-11)

    @given(
        m1=st.integers(1, 9),
        m2=st.integers(1, 9),
        d_n=st.integers(0, 4),
        rmag=st.floats(0.05, 0.95),
        kval=st.floats(-5, 5, allow_nan=False),
        pos=st.booleans(),
    )
    @settings(max_examples=60, deadline=None)
    def test_quadrature_agreement(self, m1, m2, d_n, rmag, kval, pos):
        r = rmag if pos else -rmag
        params = ProfileParams(m1=m1, m2=m2, d_n=d_n, r=r, n=1 if pos else -1, fano_index=1)
        ref = quad_f(kval, m1, m2, r, d_n)
        scale = (1.0 / m1 + 1.0 / m2) * (1.0 + abs(r)) ** d_n * 2.0
        assert abs(f_of_k(kval, params) - ref) <= 1e-10 * max(abs(ref), 1e-2 * scale)


class TestSolveK:
    @pytest.mark.parametrize("m", [1, 2, 7])
    @pytest.mark.parametrize("r", [0.5, -0.25])
    def test_symmetric_root_is_exactly_zero(self, m, r):
        params = ProfileParams(m1=m, m2=m, d_n=0, r=r, n=1 if r > 0 else -1, fano_index=1)
        assert solve_k(params) == 0.0

    def test_asymmetric_root(self):
        k = solve_k(ASYM)
        # int(p) = 2 for d_n = 1 at any r, so the stated tolerance is explicit
        assert abs(f_of_k(k, ASYM)) <= 1e-12 * (1 / 3 + 1 / 2) * 2.0
        assert f_of_k(k - 1e-6, ASYM) > 0.0 > f_of_k(k + 1e-6, ASYM)

    def test_root_against_sign_scan(self):
        for params in (ASYM, ProfileParams(8, 3, 2, 0.7, 5, 2), ProfileParams(2, 9, 4, -0.6, -7, 3)):
            k = solve_k(params)
            ks = [k - 4.0 + 8.0 * i / 999 for i in range(1000)]
            vals = [f_of_k(kk, params) for kk in ks]
            changes = sign_changes(vals)
            assert len(changes) == 1
            idx = changes[0]
            assert ks[idx] <= k <= ks[idx] + 2 * (ks[1] - ks[0])

    def test_balanced_integral_gives_zero_root(self):
        # r = 3*(m1 - m2)/(m1 + m2) makes the k = 0 balance integral vanish for d_n = 1
        params = ProfileParams(m1=5, m2=4, d_n=1, r=3.0 * 1 / 9.0, n=1, fano_index=1)
        assert abs(solve_k(params)) <= 1e-10


class TestBuildProfile:
    def test_symmetric_profile_is_one_minus_z_squared(self):
        profile = build_profile(SYM, grid_size=2001)
        assert max(abs(s.f - (1.0 - s.z**2)) for s in profile.samples) <= 1e-13
        assert profile.k_root == 0.0
        assert profile.report.all_ok

    def test_scaled_symmetric_profile(self):
        profile = build_profile(ProfileParams(4, 4, 0, 0.5, 1, 1), grid_size=501)
        assert max(abs(4 * s.f - (1.0 - s.z**2)) for s in profile.samples) <= 1e-12

    def test_minimal_grid(self):
        profile = build_profile(SYM, grid_size=3)
        assert [s.z for s in profile.samples] == [-1.0, 0.0, 1.0]
        assert abs(profile.samples[0].f) <= 1e-12 and abs(profile.samples[-1].f) <= 1e-12

    def test_grid_validation(self):
        with pytest.raises(InvalidParameterError):
            build_profile(SYM, grid_size=2)

    def test_asymmetric_certificate(self):
        profile = build_profile(ASYM, grid_size=1001)
        rep = profile.report
        assert rep.endpoint_f_lo <= 1e-10 and rep.endpoint_f_hi <= 1e-10
        assert rep.fprime_lo_residual <= 1e-10 and rep.fprime_hi_residual <= 1e-10
        assert rep.interior_positive and rep.g_monotone
        assert rep.box_ok and rep.horizontal_positive and rep.vertical_positive
        assert rep.all_ok

    def test_profile_matches_quadrature(self):
        profile = build_profile(ASYM, grid_size=9)
        k = profile.k_root
        for s in profile.samples:
            ref = quad_profile_F(s.z, k, ASYM.m1, ASYM.m2, ASYM.r, ASYM.d_n)
            assert abs(s.f - ref) <= 1e-10 * max(abs(ref), 1e-2)

    def test_theta_is_f_over_weight(self):
        profile = build_profile(ASYM, grid_size=101)
        for s in profile.samples:
            assert s.theta == pytest.approx(s.f / weight_poly(s.z, ASYM.r, ASYM.d_n), rel=1e-14)

    def test_fprime_matches_g_times_weight_inside(self):
        profile = build_profile(ASYM, grid_size=5)
        k = profile.k_root
        h = 1e-6
        for s in profile.samples[1:-1]:
            fd = (profile_F(s.z + h, k, ASYM) - profile_F(s.z - h, k, ASYM)) / (2 * h)
            expected = g_func(s.z, k, ASYM.m1, ASYM.m2) * weight_poly(s.z, ASYM.r, ASYM.d_n)
            assert fd == pytest.approx(expected, rel=1e-7, abs=1e-9)

    def test_kaehler_einstein_flags(self):
        assert build_profile(ProfileParams(5, 4, 1, 1 / 3, 10, 7), grid_size=21).report.is_ke
        assert build_profile(ProfileParams(1, 1, 0, 0.5, 1, 2), grid_size=21).report.is_ke
        assert not build_profile(ProfileParams(1, 1, 0, 0.5, 1, 1), grid_size=21).report.is_ke
        assert not build_profile(ASYM, grid_size=21).report.is_ke


class TestProfileParamsValidation:
    def test_r_range(self):
        with pytest.raises(InvalidParameterError):
            ProfileParams(1, 1, 0, 1.5, 1, 1)
        with pytest.raises(InvalidParameterError):
            ProfileParams(1, 1, 0, 0.0, 1, 1)

    def test_r_sign_must_match_n(self):
        with pytest.raises(InvalidParameterError):
            ProfileParams(1, 1, 0, 0.5, -1, 1)

    def test_n_nonzero(self):
        with pytest.raises(InvalidParameterError):
            ProfileParams(1, 1, 0, 0.5, 0, 1)

    def test_d_n_nonnegative(self):
        with pytest.raises(InvalidParameterError):
            ProfileParams(1, 1, -1, 0.5, 1, 1)


class TestRicciBox:
    def test_worked_example(self):
        assert ricci_box_holds(2, -4, 3, 2)
        assert ricci_box_check(ASYM)

    def test_nonpositive_index_never_passes(self):
        for fano in (0, -1, -5):
            for n in (-6, -1, 1, 6):
                for m1, m2 in ((1, 1), (3, 2), (9, 5)):
                    assert not ricci_box_holds(fano, n, m1, m2)

    @given(fano=st.integers(1, 6), n=st.integers(1, 40), m1=st.integers(1, 9), m2=st.integers(1, 9))
    def test_second_condition_automatic_for_positive_n(self, fano, n, m1, m2):
        assert ricci_box_holds(fano, n, m1, m2) == (fano * m2 > n)

    @given(fano=st.integers(1, 6), n=st.integers(-40, -1), m1=st.integers(1, 9), m2=st.integers(1, 9))
    def test_first_condition_automatic_for_negative_n(self, fano, n, m1, m2):
        assert ricci_box_holds(fano, n, m1, m2) == (fano * m1 > -n)


class TestRicciCoefficients:
    def test_endpoint_values_match_box_scalars(self):
        profile = build_profile(ASYM, grid_size=11)
        samples = ricci_coefficients(profile)
        n, m1, m2, fano = ASYM.n, ASYM.m1, ASYM.m2, ASYM.fano_index
        assert samples[0].ricci_h == pytest.approx(fano / n - 1.0 / m2, abs=1e-14)
        assert samples[-1].ricci_h == pytest.approx(fano / n + 1.0 / m1, abs=1e-14)
        assert samples[0].ricci_h * n == pytest.approx(profile.report.box_first / m2, abs=1e-12)

    def test_center_value_for_flat_symmetric_case(self):
        profile = build_profile(ProfileParams(1, 1, 0, 0.5, 1, 1), grid_size=3)
        center = ricci_coefficients(profile)[1]
        assert center.z == 0.0 and center.ricci_h == pytest.approx(1.0, abs=1e-15)

    def test_vertical_always_positive(self):
        for params in (SYM, ASYM, ProfileParams(9, 2, 4, 0.9, 7, 3)):
            profile = build_profile(params, grid_size=201)
            assert all(s.ricci_v > 0 for s in ricci_coefficients(profile))

    def test_box_violation_detected_on_corrupted_profile(self):
        profile = build_profile(ASYM, grid_size=5)
        bad = list(profile.samples)
        bad[2] = ProfileSample(bad[2].z, bad[2].f, bad[2].theta, 0.0, bad[2].ricci_v)
        corrupted = MetricProfile(
            params=profile.params, k_root=profile.k_root,
            samples=tuple(bad), report=profile.report,
        )
        with pytest.raises(BoxViolationError):
            ricci_coefficients(corrupted)


class TestLift:
    def test_params_from_ray(self):
        join = validate_join(4, 1, 1, 1, CP1)
        params, data = profile_params_from_ray(join, ReebRay(3, 2))
        assert (data.n, data.m1, data.m2) == (-4, 3, 2)
        assert params.r == -0.5 and params.d_n == 1 and params.fano_index == 2
        assert ricci_box_check(params)

    def test_params_from_ray_requires_fano(self):
        join = validate_join(1, 1, 12, 1, GENUS2)
        with pytest.raises(NotFanoError):
            profile_params_from_ray(join, ReebRay(2, 1))

    def test_params_from_ray_product_case(self):
        join = validate_join(4, 1, 1, 1, CP1)
        with pytest.raises(ProductCaseError):
            profile_params_from_ray(join, ReebRay(1, 1))

    def test_lift_report(self):
        join = validate_join(4, 1, 1, 1, CP1)
        rays = [ReebRay(3, 2), ReebRay(4, 3), ReebRay(5, 4), ReebRay(1, 1)]
        report = sasaki_lift_check(join, rays, grid_size=101)
        by_ray = {(e.ray.v1, e.ray.v2): e for e in report.entries}
        assert not by_ray[(1, 1)].accepted  # product case
        for key in ((3, 2), (4, 3), (5, 4)):
            entry = by_ray[key]
            assert entry.accepted and entry.box_ok
            assert entry.doubling_max_diff <= 1e-12
            assert entry.l2_variant is not None and entry.l2_variant_m != entry.m
            assert entry.l2_variant_max_diff <= 1e-9
        assert len(report.neighbor_gaps) == 2
        for gap in report.neighbor_gaps:
            assert gap.sup_gap <= 2.0 * gap.ratio_gap

    def test_lift_refuses_rays_outside_positivity(self):
        join = validate_join(1, 1, 7, 1, CP1)
        report = sasaki_lift_check(join, [ReebRay(1, 1)], grid_size=51)
        entry = report.entries[0]
        assert not entry.accepted and "outside" in entry.reason

    def test_bracket_failure_unreachable_in_range(self):
        # sanity guard: every admissible draw brackets within the cap
        for params in (SYM, ASYM, ProfileParams(9, 1, 4, 0.95, 2, 1), ProfileParams(1, 9, 4, -0.95, -2, 1)):
            try:
                solve_k(params)
            except BracketFailureError as exc:  # pragma: no cover
                pytest.fail(f"unexpected bracket failure: {exc}")
