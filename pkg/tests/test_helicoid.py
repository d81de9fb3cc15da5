import math
import random

import numpy as np
import pytest

from pshelix import elliptic
from pshelix.helicoid import (
    RAW_HELICITY,
    HelicoidClass,
    HelicoidParams,
    MirrorCheckError,
    NearSingularError,
    SingularPointError,
    angular_function,
    classify,
    closed_fundamental_forms,
    fd_fundamental_forms,
    gauss_curvature,
    helpers,
    measured_helicity,
    mirror_pair_check,
    period,
    planar_profile,
    profile_radius,
    singular_spacing,
    spatial_profile,
    surface_from_profile,
    surface_point,
)

FORM_NAMES = ("g11", "g12", "g22", "h11", "h12", "h22")

# Frozen helper values at (mu=2, r=0.3, u=0.7), computed by composing the
# adaptive-quadrature oracle with the closed formulas.
HELPERS_2_03_07 = dict(
    psi=0.6081864790131865,
    xi=0.187580009541188,
    zeta=-0.728230933333188,
    q1=-5.114413445516799,
    q2=2.9486923145020247,
    rho=-3.3743819485892144,
)


# ---------------------------------------------------------------------------
# parameter domain
# ---------------------------------------------------------------------------


def test_classify_paper_pairs(magnetic1, electric1):
    assert classify(magnetic1) is HelicoidClass.MAGNETIC
    assert classify(electric1) is HelicoidClass.ELECTRIC


@pytest.mark.parametrize(
    "mu,r,match",
    [
        (1.0, 0.5, "Dini"),
        (0.0, 0.5, "mu"),
        (-2.0, 0.5, "mirror"),
        (2.0, 0.0, "revolution"),
        (2.0, -0.3, "mirror"),
    ],
)
def test_excluded_cases_named(mu, r, match):
    with pytest.raises(ValueError, match=match):
        HelicoidParams(mu, r)


def test_bad_helicity_rejected():
    with pytest.raises(ValueError):
        HelicoidParams(2.0, 0.5, 2)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def test_helpers_frozen_magnetic():
    h = helpers(HelicoidParams(2.0, 0.3), 0.7)
    for name, want in HELPERS_2_03_07.items():
        assert getattr(h, name) == pytest.approx(want, abs=1e-10), name


def test_helpers_magnetic_u0():
    p = HelicoidParams(2.0, 0.3)
    h = helpers(p, 0.0)
    assert h.xi == 0.0
    m = p.m
    sh2 = math.sinh(p.r) ** 2
    K, E = elliptic.complete_KE(m)
    want_zeta = (E - math.cosh(p.r) ** 2 * K) / math.sqrt(m + sh2)
    assert h.zeta == pytest.approx(want_zeta, rel=1e-13)
    assert math.isinf(h.q1) and math.isinf(h.q2)


def test_helpers_electric_u0(electric1):
    h = helpers(electric1, 0.0)
    m = electric1.m
    sh, ch = math.sinh(electric1.r), math.cosh(electric1.r)
    assert h.q2 == 0.0
    assert h.q1 == pytest.approx(ch * sh / (m + sh * sh), rel=1e-13)
    assert h.zeta == 0.0
    assert h.psi == 0.0


def test_helpers_rho_negative_both_types(magnetic1, electric1):
    for p in (magnetic1, electric1):
        assert helpers(p, 0.3).rho < 0.0


def test_raw_helper_product_matches_cancelled_radius(magnetic1):
    # away from the poles the raw product xi*sqrt(q1^2+q2^2) equals the
    # cancelled profile radius
    for u in (0.2, 1.0, 2.7, -0.9):
        h = helpers(magnetic1, u)
        raw = h.xi * math.hypot(h.q1, h.q2)
        assert raw == pytest.approx(profile_radius(magnetic1, u), rel=1e-11)


def test_profile_radius_finite_at_poles(magnetic1):
    T = period(magnetic1)
    for u in (0.0, T, -T, 2 * T):
        q = profile_radius(magnetic1, u)
        assert math.isfinite(q) and q > 0


# ---------------------------------------------------------------------------
# spatial profile and surface map
# ---------------------------------------------------------------------------


def test_spatial_profile_finite_at_pole_with_one_sided_limits(magnetic1):
    c = spatial_profile(magnetic1, 0.0)
    assert all(math.isfinite(x) for x in c)
    lo = spatial_profile(magnetic1, -1e-6)
    hi = spatial_profile(magnetic1, 1e-6)
    for a, b in zip(lo, hi):
        assert abs(a - b) < 1e-5
    for a, b in zip(c, hi):
        assert abs(a - b) < 1e-5


def test_spatial_profile_electric_u0(electric1):
    h = helpers(electric1, 0.0)
    x, y, z = spatial_profile(electric1, 0.0)
    assert x == pytest.approx(h.xi * h.q1 * math.cos(h.psi), rel=1e-13)
    assert y == pytest.approx(h.xi * h.q1 * math.sin(h.psi), rel=1e-13)
    assert z == 0.0


@pytest.mark.parametrize("helicity", [-1, 1])
def test_planar_radius_matches_spatial_norm(helicity):
    p = HelicoidParams(1.90951, 0.127237, helicity)
    rng = random.Random(3)
    for _ in range(20):
        u = rng.uniform(-8.0, 8.0)
        x, y, _ = spatial_profile(p, u)
        assert math.hypot(x, y) == pytest.approx(profile_radius(p, u), rel=1e-11)


def test_surface_point_v0_and_full_turn(magnetic1):
    for u in (0.3, 1.4):
        assert surface_point(magnetic1, u, 0.0) == pytest.approx(
            spatial_profile(magnetic1, u), abs=1e-14
        )
        rho = helpers(magnetic1, u).rho
        a = surface_point(magnetic1, u, 1.0)
        b = spatial_profile(magnetic1, u)
        assert a[0] == pytest.approx(b[0], abs=1e-12)
        assert a[1] == pytest.approx(b[1], abs=1e-12)
        assert a[2] == pytest.approx(b[2] + rho, abs=1e-12)


@pytest.mark.parametrize("helicity", [-1, 1])
def test_helical_equivariance(helicity):
    # raw handedness rotates by +2*pi*w per rho*w advance; the mirrored
    # surface rotates the other way
    p = HelicoidParams(0.770862, 0.289255, helicity)
    rng = random.Random(11)
    sense = 1.0 if helicity == RAW_HELICITY else -1.0
    for _ in range(10):
        u, v, w = rng.uniform(0, 3), rng.uniform(-1, 1), rng.uniform(-1.5, 1.5)
        a = surface_point(p, u, v + w)
        b = surface_point(p, u, v)
        ang = 2 * math.pi * w * sense
        rho = helpers(p, u).rho
        want = (
            math.cos(ang) * b[0] - math.sin(ang) * b[1],
            math.sin(ang) * b[0] + math.cos(ang) * b[1],
            b[2] + rho * w,
        )
        for x, y in zip(a, want):
            assert abs(x - y) < 1e-10


def test_measured_helicity_matches_request():
    assert measured_helicity(HelicoidParams(1.90951, 0.127237, -1)) == -1
    assert measured_helicity(HelicoidParams(1.90951, 0.127237, 1)) == 1
    assert measured_helicity(HelicoidParams(0.770862, 0.289255, -1)) == -1


# ---------------------------------------------------------------------------
# angular function and planar profile
# ---------------------------------------------------------------------------


def test_theta_continuity_at_magnetic_singular_args(magnetic1):
    T = period(magnetic1)
    for h in (-2, -1, 0, 1, 2):
        c = h * T
        lo = angular_function(magnetic1, c - 1e-8)
        hi = angular_function(magnetic1, c + 1e-8)
        mid = angular_function(magnetic1, c)
        assert abs(hi - lo) < 1e-6
        assert min(lo, hi) - 1e-6 <= mid <= max(lo, hi) + 1e-6


def test_theta_electric_zero_at_origin(electric1):
    assert angular_function(electric1, 0.0) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("fixture", ["magnetic1", "electric1"])
def test_theta_matches_unwrapped_planar_angle(fixture, request):
    # independent check: theta must be a continuous branch of the actual
    # planar angle of the spatial profile
    p = request.getfixturevalue(fixture)
    T = period(p)
    us = np.linspace(-1.7 * T, 1.7 * T, 1600)
    raw = []
    for u in us:
        x, y, _ = spatial_profile(p, float(u))
        raw.append(math.atan2(y, x))
    unwrapped = np.unwrap(np.array(raw))
    theta = np.array([angular_function(p, float(u)) for u in us])
    diff = 2 * math.pi * theta - unwrapped
    assert np.max(np.abs(diff - diff.mean())) < 1e-8
    # the constant offset is a whole number of turns
    assert abs(diff.mean() / (2 * math.pi) - round(diff.mean() / (2 * math.pi))) < 1e-9


def test_planar_profile_positive_x_and_radius(magnetic1, electric1):
    rng = random.Random(5)
    for p in (magnetic1, electric1):
        for _ in range(25):
            u = rng.uniform(-10, 10)
            x, y, _ = planar_profile(p, u)
            assert y == 0.0
            assert x > 0.0
            assert x == pytest.approx(profile_radius(p, u), rel=1e-12)


def test_planar_profile_magnetic_inner_radius_at_quarter(magnetic1):
    m = magnetic1.m
    sh2 = math.sinh(magnetic1.r) ** 2
    K = elliptic.complete_KE(m)[0]
    # product form consistent with the aspect-ratio formula (see ledger)
    want = math.sqrt(m * (1.0 - m)) / (m + sh2)
    assert planar_profile(magnetic1, K)[0] == pytest.approx(want, rel=1e-12)


def test_planar_profile_electric_outer_radius_at_origin(electric1):
    m = electric1.m
    sh2 = math.sinh(electric1.r) ** 2
    want = math.sqrt(m) * math.cosh(electric1.r) / (m + sh2)
    assert planar_profile(electric1, 0.0)[0] == pytest.approx(want, rel=1e-12)


def test_planar_profile_translation_steps_down(magnetic1, electric1):
    from pshelix.invariants import invariants

    for p in (magnetic1, electric1):
        T = period(p)
        w = invariants(p).wavelength
        for u in (0.0, 0.37, 1.9):
            a = planar_profile(p, u)
            b = planar_profile(p, u + T)
            assert b[0] - a[0] == pytest.approx(0.0, abs=1e-9)
            assert b[2] - a[2] == pytest.approx(-w, abs=1e-9)


def test_sweep_matches_profile_at_v0(magnetic1):
    for u in (0.0, 0.8, 2.2):
        assert surface_from_profile(magnetic1, u, 0.0) == pytest.approx(
            planar_profile(magnetic1, u), abs=1e-14
        )


def test_sweep_full_turn_advances_by_rho(magnetic1):
    rho = helpers(magnetic1, 0.5).rho
    for (u, v) in ((0.5, 0.2), (1.7, -1.4)):
        a = surface_from_profile(magnetic1, u, v + 1.0)
        b = surface_from_profile(magnetic1, u, v)
        assert a[2] - b[2] == pytest.approx(rho, abs=1e-12)


@pytest.mark.parametrize("fixture", ["magnetic1", "electric1"])
def test_sweep_is_reparametrization_of_surface(fixture, request):
    # the profile runs down while the closed parametrization runs up, so
    # the sweep at u matches the surface at -u with the angle shift
    # theta(-u); exact, no extra rotation
    p = request.getfixturevalue(fixture)
    rng = random.Random(17)
    for _ in range(20):
        u = rng.uniform(-4.0, 4.0)
        v = rng.uniform(-2.0, 2.0)
        th = angular_function(p, -u)
        a = surface_from_profile(p, u, v)
        b = surface_point(p, -u, v - th)
        for x, y in zip(a, b):
            assert abs(x - y) < 1e-10


# ---------------------------------------------------------------------------
# fundamental forms and curvature
# ---------------------------------------------------------------------------


def test_closed_forms_trivial_points(magnetic1):
    m = magnetic1.m
    sh2 = math.sinh(magnetic1.r) ** 2
    f0 = closed_fundamental_forms(magnetic1, 0.0)
    assert f0.g11 == pytest.approx(sh2, rel=1e-13)
    assert f0.h11 == 0.0
    K = elliptic.complete_KE(m)[0]
    fK = closed_fundamental_forms(magnetic1, K)
    assert fK.g11 == pytest.approx(m + sh2, rel=1e-12)
    assert fK.h11 == pytest.approx(-math.sqrt(m) * math.sqrt(1 - m), rel=1e-12)


def test_closed_g12_constant_in_u(magnetic1):
    vals = [closed_fundamental_forms(magnetic1, u).g12 for u in (-2.0, 0.3, 1.1, 4.2)]
    m = magnetic1.m
    want = (
        -math.sqrt(2.0)
        * math.pi
        * math.sinh(2 * magnetic1.r)
        / math.sqrt(-1.0 + 2.0 * m + math.cosh(2 * magnetic1.r))
    )
    for v in vals:
        assert v == pytest.approx(want, rel=1e-13)


def test_closed_h12_zero(magnetic1, electric1):
    for p in (magnetic1, electric1):
        for u in (0.1, 0.9, 3.3):
            assert closed_fundamental_forms(p, u).h12 == 0.0


def test_closed_form_gauss_curvature_is_minus_one(magnetic1, electric1):
    rng = random.Random(23)
    for p in (magnetic1, electric1):
        for _ in range(20):
            u = rng.uniform(-6, 6)
            f = closed_fundamental_forms(p, u)
            det_g = f.g11 * f.g22 - f.g12**2
            if det_g < 1e-12:
                continue  # singular argument
            K = (f.h11 * f.h22 - f.h12**2) / det_g
            assert K == pytest.approx(-1.0, abs=1e-10)


@pytest.mark.parametrize("helicity", [-1, 1])
@pytest.mark.parametrize("pair", [(1.90951, 0.127237), (0.770862, 0.289255)])
def test_fd_forms_match_closed(pair, helicity):
    p = HelicoidParams(pair[0], pair[1], helicity)
    Lam = singular_spacing(p)
    rng = random.Random(31)
    for _ in range(12):
        u = (rng.randint(-2, 2) + rng.uniform(0.15, 0.85)) * Lam
        v = rng.uniform(-1, 1)
        fd = fd_fundamental_forms(p, u, v, 1e-4)
        cf = closed_fundamental_forms(p, u)
        for name in FORM_NAMES:
            a, b = getattr(fd, name), getattr(cf, name)
            assert abs(a - b) <= 1e-6 * max(1.0, abs(b)), (name, u)


def test_fd_forms_second_order_convergence(magnetic1):
    u, v = 0.9, 0.25
    cf = closed_fundamental_forms(magnetic1, u)

    def err(h):
        fd = fd_fundamental_forms(magnetic1, u, v, h)
        return max(abs(getattr(fd, n) - getattr(cf, n)) for n in FORM_NAMES)

    e1, e2 = err(2e-4), err(1e-4)
    assert e2 < e1
    assert e1 / e2 == pytest.approx(4.0, rel=0.35)


def test_fd_forms_singular_signal(magnetic1):
    with pytest.raises(SingularPointError):
        fd_fundamental_forms(magnetic1, 0.0, 0.3, 1e-4)


def test_fd_rank_drop_detected_via_metric(magnetic1):
    # at the singular rows the closed metric determinant collapses while
    # g11 stays positive: the rank test is on det(g), not on g11 alone
    f = closed_fundamental_forms(magnetic1, 0.0)
    assert f.g11 > 0
    assert f.g11 * f.g22 - f.g12**2 == pytest.approx(0.0, abs=1e-12)


def test_gauss_curvature_fd(magnetic1, electric1):
    K1 = gauss_curvature(magnetic1, elliptic.complete_KE(magnetic1.m)[0], 0.3, 1e-4)
    assert K1 == pytest.approx(-1.0, abs=1e-4)
    T = period(electric1)
    K2 = gauss_curvature(electric1, 0.31 * T, -0.2, 1e-4)
    assert K2 == pytest.approx(-1.0, abs=1e-4)


def test_gauss_curvature_refuses_near_singular(magnetic1):
    with pytest.raises(NearSingularError):
        gauss_curvature(magnetic1, 0.01, 0.0, 1e-4)


# ---------------------------------------------------------------------------
# mirror identities
# ---------------------------------------------------------------------------


def test_mirror_part2_pairs():
    rep = mirror_pair_check(2.0, 0.4, 25)
    assert rep["ok"] and rep["max_dev_part2"] < 1e-8


def test_mirror_part1_negative_mu():
    rep = mirror_pair_check(-1.0, 0.4, 25)
    assert rep["ok"]
    assert rep["max_dev_part1"] < 1e-8
    assert rep["max_dev_part2"] < 1e-8


def test_mirror_vacuous_with_zero_samples():
    rep = mirror_pair_check(2.0, 0.4, 0)
    assert rep["ok"]
    assert rep["max_dev_part1"] == 0.0 and rep["max_dev_part2"] == 0.0


def test_mirror_rejects_excluded_parameters():
    with pytest.raises(ValueError):
        mirror_pair_check(1.0, 0.4, 3)
    with pytest.raises(ValueError):
        mirror_pair_check(2.0, 0.0, 3)
