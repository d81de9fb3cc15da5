"""Closed-form pseudospherical helicoids and their fundamental forms.

A helicoid here is determined by (mu, r, helicity) with mu > 0, mu != 1,
r > 0.  mu > 1 is the magnetic class, mu in (0, 1) the electric class; in
both cases the Jacobi parameter is m = 1/mu.  The classical exclusions
(mu = 1 Dini helicoids, r = 0 surfaces of revolution, and the mirror
normal form for mu < 0 or r < 0) are rejected at construction.

Conventions fixed by this module:

* The surface is the image of the closed-form global parametrization
  ``surface_point``; its screw motion advances by rho < 0 along z per
  counterclockwise turn, so the unmirrored formulas are left-handed
  (helicity -1).  Requesting helicity +1 post-composes the mirror
  (x, y, z) -> (x, -y, z).
* The planar profile is traversed in the direction of decreasing axial
  coordinate: ``planar_profile(p, u)`` evaluates the closed profile
  formulas at -u.  The profile radius is even in u, so radii, cusp
  parameters, and the wavelength are unaffected; the z-component then
  steps by exactly -wavelength per period as u increases.
* The angular function ``angular_function`` is returned in turns and is
  continuous on all of R; at the magnetic singular arguments u = 2hK(m)
  it takes the two-sided limit value.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from . import elliptic

__all__ = [
    "HelicoidClass",
    "HelicoidParams",
    "HelperValues",
    "FundamentalForms",
    "SingularPointError",
    "NearSingularError",
    "MirrorCheckError",
    "RAW_HELICITY",
    "classify",
    "helpers",
    "period",
    "singular_spacing",
    "spatial_profile",
    "surface_point",
    "angular_function",
    "planar_profile",
    "profile_radius",
    "surface_from_profile",
    "closed_fundamental_forms",
    "fd_fundamental_forms",
    "gauss_curvature",
    "measured_helicity",
    "mirror_pair_check",
]

# Handedness of the unmirrored closed formulas (z-advance rho < 0 per
# counterclockwise turn), verified by measured_helicity().
RAW_HELICITY = -1

# Curvature queries closer than this (in u) to the singular set are refused.
SINGULAR_MARGIN = 0.05


class SingularPointError(ValueError):
    """Signal: the queried point is on (or numerically at) the singular set."""


class NearSingularError(ValueError):
    """Signal: too close to the singular set for a reliable FD estimate."""


class MirrorCheckError(AssertionError):
    """A mirror-image identity failed beyond tolerance."""


class HelicoidClass(enum.Enum):
    MAGNETIC = "magnetic"
    ELECTRIC = "electric"


@dataclass(frozen=True)
class HelicoidParams:
    """Congruence data (mu, r) plus helicity of a pseudospherical helicoid."""

    mu: float
    r: float
    helicity: int = RAW_HELICITY

    def __post_init__(self) -> None:
        if not math.isfinite(self.mu) or not math.isfinite(self.r):
            raise ValueError("mu and r must be finite")
        if self.mu == 1.0:
            raise ValueError(
                "mu = 1 is the excluded Dini helicoid; this library covers mu > 0, mu != 1"
            )
        if self.mu <= 0.0:
            raise ValueError(
                "mu <= 0 is excluded: reduce to the mirror normal form with mu > 0 first"
            )
        if self.r == 0.0:
            raise ValueError("r = 0 is the excluded surface of revolution")
        if self.r < 0.0:
            raise ValueError(
                "r < 0 is excluded: (mu, -r) is the mirror image of (mu, r); use r > 0"
            )
        if self.helicity not in (-1, 1):
            raise ValueError("helicity must be +1 or -1")

    @property
    def m(self) -> float:
        """Jacobi parameter m = 1/mu (in (0,1) magnetic, > 1 electric)."""
        return 1.0 / self.mu

    @property
    def kind(self) -> HelicoidClass:
        return HelicoidClass.MAGNETIC if self.mu > 1.0 else HelicoidClass.ELECTRIC


@dataclass(frozen=True)
class HelperValues:
    """Raw helper-function values at one parameter point.

    psi is in radians, zeta is a length, rho the signed z-advance per
    turn.  For the magnetic class q1 and q2 blow up at u = 2hK(m); they
    are reported as signed infinities there (the products used by the
    profile routines stay finite).
    """

    psi: float
    xi: float
    zeta: float
    q1: float
    q2: float
    rho: float


@dataclass(frozen=True)
class FundamentalForms:
    g11: float
    g12: float
    g22: float
    h11: float
    h12: float
    h22: float


def classify(p: HelicoidParams) -> HelicoidClass:
    """Magnetic for mu > 1, electric for mu in (0, 1)."""
    return p.kind


# ---------------------------------------------------------------------------
# Frame: everything the closed formulas need at one (p, u)
# ---------------------------------------------------------------------------


class _Frame:
    """Cached per-(p, u) evaluation of the closed-form ingredients."""

    __slots__ = (
        "m", "sh", "ch", "sh2", "s", "rho", "psi", "zeta",
        "sn", "cn", "dn", "xi", "xiq1", "xiq2",
    )

    def __init__(self, p: HelicoidParams, u: float):
        m = p.m
        sh, ch = math.sinh(p.r), math.cosh(p.r)
        sh2 = sh * sh
        s = math.sqrt(m + sh2)
        self.m, self.sh, self.ch, self.sh2, self.s = m, sh, ch, sh2, s
        self.rho = -2.0 * math.pi * ch * sh / (m + sh2)
        sn, cn, dn = elliptic.jacobi_sn_cn_dn(u, m)
        self.sn, self.cn, self.dn = sn, cn, dn
        if m < 1.0:  # magnetic
            K, E = elliptic.complete_KE(m)
            nchar = -m / sh2
            self.psi = s * (ch / sh) * (
                elliptic.complete_third(nchar, m) - elliptic.pi_fn(nchar, u, m)
            )
            self.zeta = (E + ch * ch * (u - K) - elliptic.epsilon_fn(u, m)) / s
            root = math.sqrt(m * sn * sn + sh2)
            self.xi = dn * sn * sn * root
            # sn-cancelled planar components xi*q1, xi*q2 (finite everywhere)
            self.xiq1 = -math.sqrt(m) * sn * dn / (s * root)
            self.xiq2 = math.sqrt(m) * ch * sh * cn / ((m + sh2) * root)
        else:  # electric, m > 1
            rm = math.sqrt(m)
            nchar = -1.0 / sh2
            self.psi = -(s * ch / (sh * rm)) * elliptic.pi_fn(nchar, rm * u, 1.0 / m)
            self.zeta = (
                (ch * ch + m - 1.0) * u - rm * elliptic.epsilon_fn(rm * u, 1.0 / m)
            ) / s
            self.xi = math.sqrt(m / (m * sn * sn + sh2))
            self.xiq1 = self.xi * ch * sh * cn / (m + sh2)
            self.xiq2 = self.xi * dn * sn / s


def period(p: HelicoidParams) -> float:
    """Period of the planar profile in u: 2K(m) magnetic, 2K(1/m)/sqrt(m) electric."""
    m = p.m
    if m < 1.0:
        return 2.0 * elliptic.complete_KE(m)[0]
    return 2.0 * elliptic.complete_KE(1.0 / m)[0] / math.sqrt(m)


def singular_spacing(p: HelicoidParams) -> float:
    """Spacing of the singular arguments: the full period for magnetic
    (cusps at 2hK), half the period for electric (cusps at h*omega/2)."""
    T = period(p)
    return T if p.mu > 1.0 else T / 2.0


def helpers(p: HelicoidParams, u: float) -> HelperValues:
    """Raw helper values (psi, xi, zeta, q1, q2, rho) at u."""
    f = _Frame(p, u)
    if p.mu > 1.0:
        m, sh2, s = f.m, f.sh2, f.s
        sn, cn, dn = f.sn, f.cn, f.dn
        if sn == 0.0:
            # Signed infinities matching the u -> u+ limit.
            q1 = -math.inf if cn > 0 else math.inf
            q2 = math.inf if cn > 0 else -math.inf
        else:
            q1 = -math.sqrt(m) / (s * sn * (m * sn * sn + sh2))
            q2 = (
                math.sqrt(m) * f.ch * f.sh * cn
                / ((m + sh2) * sn * sn * dn * (m * sn * sn + sh2))
            )
        return HelperValues(f.psi, f.xi, f.zeta, q1, q2, f.rho)
    q1 = f.ch * f.sh * f.cn / (f.m + f.sh2)
    q2 = f.dn * f.sn / f.s
    return HelperValues(f.psi, f.xi, f.zeta, q1, q2, f.rho)


def _mirror(pt: tuple[float, float, float]) -> tuple[float, float, float]:
    return (pt[0], -pt[1], pt[2])


def spatial_profile(p: HelicoidParams, u: float) -> tuple[float, float, float]:
    """The spatial (non-planar) profile curve, finite for all u.

    The magnetic sn poles of q1, q2 are evaluated in cancelled form.
    """
    f = _Frame(p, u)
    c, s = math.cos(f.psi), math.sin(f.psi)
    pt = (c * f.xiq1 - s * f.xiq2, s * f.xiq1 + c * f.xiq2, f.zeta)
    return _mirror(pt) if p.helicity != RAW_HELICITY else pt


def surface_point(p: HelicoidParams, u: float, v: float) -> tuple[float, float, float]:
    """Global parametrization: rotate the spatial profile by 2*pi*v and
    advance rho*v along the axis; mirrored when helicity differs from the
    raw handedness of the formulas."""
    f = _Frame(p, u)
    cp, sp = math.cos(f.psi), math.sin(f.psi)
    x, y = cp * f.xiq1 - sp * f.xiq2, sp * f.xiq1 + cp * f.xiq2
    cv, sv = math.cos(2.0 * math.pi * v), math.sin(2.0 * math.pi * v)
    pt = (cv * x - sv * y, sv * x + cv * y, f.zeta + f.rho * v)
    return _mirror(pt) if p.helicity != RAW_HELICITY else pt


def _theta_forward(p: HelicoidParams, u: float) -> float:
    """Angular function of the forward (closed-formula) profile, in turns."""
    f = _Frame(p, u)
    if p.mu <= 1.0:
        # electric: q1 > 0 everywhere, no branch correction needed
        return (f.psi + math.atan(f.xiq2 / f.xiq1)) / (2.0 * math.pi)
    Lam = period(p)  # 2K(m)
    t = u / Lam
    j = round(t)
    if abs(u - j * Lam) <= 1e-12 * max(1.0, abs(u)):
        # two-sided limit at the singular argument
        return (f.psi + (2.0 * j + 1.0) * math.pi / 2.0) / (2.0 * math.pi)
    if f.xiq1 == 0.0:
        ratio = math.copysign(math.inf, f.xiq2)
    else:
        ratio = f.xiq2 / f.xiq1
    return (f.psi + math.atan(ratio) + math.pi * (math.floor(t) + 1.0)) / (2.0 * math.pi)


def angular_function(p: HelicoidParams, u: float) -> float:
    """Continuous winding angle theta(u) of the profile half-plane, in turns.

    Equals the closed step-corrected formula away from the magnetic
    singular arguments; at u = 2hK(m) the continuous limit is returned.
    """
    return _theta_forward(p, u)


def profile_radius(p: HelicoidParams, u: float) -> float:
    """Distance of the profile point from the screw axis (finite, even in u).

    Skips the psi/zeta integrals; this is the hot path of the radius
    optimizer.
    """
    m = p.m
    sh, ch = math.sinh(p.r), math.cosh(p.r)
    sh2 = sh * sh
    s = math.sqrt(m + sh2)
    sn, cn, dn = elliptic.jacobi_sn_cn_dn(u, m)
    if m < 1.0:
        root = math.sqrt(m * sn * sn + sh2)
        a = -math.sqrt(m) * sn * dn / (s * root)
        b = math.sqrt(m) * ch * sh * cn / ((m + sh2) * root)
    else:
        xi = math.sqrt(m / (m * sn * sn + sh2))
        a = xi * ch * sh * cn / (m + sh2)
        b = xi * dn * sn / s
    return math.hypot(a, b)


def planar_profile(p: HelicoidParams, u: float) -> tuple[float, float, float]:
    """Planar profile (x, 0, z) in the half-plane y = 0, x > 0.

    Traversed in the direction of decreasing z: one period in u lowers the
    curve by exactly one wavelength.  The x-component is even in u and
    equals the spatial profile's distance from the axis.
    """
    w = -u
    f = _Frame(p, w)
    z = f.zeta - f.rho * _theta_forward(p, w)
    return (math.hypot(f.xiq1, f.xiq2), 0.0, z)


def surface_from_profile(p: HelicoidParams, u: float, v: float) -> tuple[float, float, float]:
    """Helicoidal sweep of the planar profile.

    For the raw handedness the z-advance per turn is rho; the mirrored
    (helicity-flipped) surface sweeps with -rho.
    """
    x, _, z = planar_profile(p, u)
    cv, sv = math.cos(2.0 * math.pi * v), math.sin(2.0 * math.pi * v)
    rho = -2.0 * math.pi * math.cosh(p.r) * math.sinh(p.r) / (p.m + math.sinh(p.r) ** 2)
    axial = rho * v if p.helicity == RAW_HELICITY else -rho * v
    return (x * cv, x * sv, z + axial)


# ---------------------------------------------------------------------------
# Fundamental forms and curvature
# ---------------------------------------------------------------------------


def closed_fundamental_forms(p: HelicoidParams, u: float) -> FundamentalForms:
    """The six closed-form coefficients, valid for both classes.

    g12 is independent of u; h12 vanishes identically in these coordinates.
    """
    m = p.m
    sh2 = math.sinh(p.r) ** 2
    c2r = math.cosh(2.0 * p.r)
    sn, _, dn = elliptic.jacobi_sn_cn_dn(u, m)
    den = -1.0 + 2.0 * m + c2r  # = 2(m + sinh^2 r)
    g11 = m * sn * sn + sh2
    g22 = 4.0 * math.pi**2 * (1.0 + c2r - 2.0 * m * sn * sn) / den
    g12 = -math.sqrt(2.0) * math.pi * math.sinh(2.0 * p.r) / math.sqrt(den)
    h11 = -math.sqrt(m) * dn * sn
    h22 = 8.0 * math.pi**2 * math.sqrt(m) * dn * sn / den
    return FundamentalForms(g11, g12, g22, h11, 0.0, h22)


def _fd_forms_raw(
    p: HelicoidParams, u: float, v: float, h: float
) -> tuple[FundamentalForms, float]:
    """FD forms with the bare du x dv normal; returns (forms, |du x dv|)."""
    f = lambda a, b: surface_point(p, a, b)

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    fu = tuple((x - y) / (2.0 * h) for x, y in zip(f(u + h, v), f(u - h, v)))
    fv = tuple((x - y) / (2.0 * h) for x, y in zip(f(u, v + h), f(u, v - h)))
    c = f(u, v)
    fuu = tuple((a - 2.0 * b + d) / (h * h) for a, b, d in zip(f(u + h, v), c, f(u - h, v)))
    fvv = tuple((a - 2.0 * b + d) / (h * h) for a, b, d in zip(f(u, v + h), c, f(u, v - h)))
    fuv = tuple(
        (a - b - d + e) / (4.0 * h * h)
        for a, b, d, e in zip(f(u + h, v + h), f(u + h, v - h), f(u - h, v + h), f(u - h, v - h))
    )
    nx = fu[1] * fv[2] - fu[2] * fv[1]
    ny = fu[2] * fv[0] - fu[0] * fv[2]
    nz = fu[0] * fv[1] - fu[1] * fv[0]
    norm = math.sqrt(nx * nx + ny * ny + nz * nz)
    if norm < 1e-10:
        raise SingularPointError(
            f"tangent cross product degenerate at (u={u}, v={v}): rank drop"
        )
    n = (nx / norm, ny / norm, nz / norm)
    dot = lambda a, b: a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    forms = FundamentalForms(
        dot(fu, fu), dot(fu, fv), dot(fv, fv), dot(fuu, n), dot(fuv, n), dot(fvv, n)
    )
    return forms, norm


def fd_fundamental_forms(
    p: HelicoidParams, u: float, v: float, h: float = 1e-4
) -> FundamentalForms:
    """Finite-difference fundamental forms of surface_point.

    The normal is the normalized du x dv cross product, with its sign
    calibrated once per fold region (the strip between consecutive
    singular arguments): at the region's quarter point the FD h11 must
    agree in sign with the closed form, which also absorbs the global
    flip introduced by a helicity mirror.  Raises SingularPointError when
    the tangents degenerate.
    """
    if h <= 0.0:
        raise ValueError("stencil step h must be positive")
    forms, _ = _fd_forms_raw(p, u, v, h)
    Lam = singular_spacing(p)
    ucal = (math.floor(u / Lam) + 0.25) * Lam
    cal_closed = closed_fundamental_forms(p, ucal).h11
    cal_fd = _fd_forms_raw(p, ucal, v, h)[0].h11
    if cal_closed * cal_fd < 0.0:
        forms = FundamentalForms(
            forms.g11, forms.g12, forms.g22, -forms.h11, -forms.h12, -forms.h22
        )
    return forms


def distance_to_singular_set(p: HelicoidParams, u: float) -> float:
    """Distance in u from the nearest singular argument."""
    Lam = singular_spacing(p)
    return abs(u - Lam * round(u / Lam))


def gauss_curvature(p: HelicoidParams, u: float, v: float, h: float = 1e-4) -> float:
    """FD Gauss curvature det(h)/det(g); about -1 away from the singular set.

    Refuses points within SINGULAR_MARGIN of a singular argument, where
    second-order stencils degrade.
    """
    if distance_to_singular_set(p, u) <= SINGULAR_MARGIN:
        raise NearSingularError(
            f"u={u} is within {SINGULAR_MARGIN} of the singular set; estimate unreliable"
        )
    forms, _ = _fd_forms_raw(p, u, v, h)
    det_g = forms.g11 * forms.g22 - forms.g12 * forms.g12
    det_h = forms.h11 * forms.h22 - forms.h12 * forms.h12
    return det_h / det_g


def measured_helicity(p: HelicoidParams, u: float | None = None, w: float = 0.125) -> int:
    """Handedness of the screw motion measured from the parametrization.

    Finds the rotation sense sigma for which f(u, v+w) equals the
    rotation by 2*pi*sigma*w of f(u, v) plus its axial advance, then
    returns the helicity sign sigma * sign(axial advance per positive
    turn).  Equals p.helicity by construction; exposed for metadata and
    self-checks.
    """
    if u is None:
        u = 0.5 * period(p)
    a = surface_point(p, u, 0.0)
    b = surface_point(p, u, w)
    dz = b[2] - a[2]
    best = None
    for sigma in (1, -1):
        ang = 2.0 * math.pi * sigma * w
        rx = math.cos(ang) * a[0] - math.sin(ang) * a[1]
        ry = math.sin(ang) * a[0] + math.cos(ang) * a[1]
        err = math.hypot(b[0] - rx, b[1] - ry)
        if best is None or err < best[0]:
            best = (err, sigma)
    sigma = best[1]
    # axial advance per positive sigma-turn: dz corresponds to sigma*w turns
    return int(math.copysign(1.0, sigma * dz))


# ---------------------------------------------------------------------------
# Mirror identities (normal-form justification)
# ---------------------------------------------------------------------------


def _ffl_forms(mu: float, r: float, u: float) -> FundamentalForms:
    """Fundamental forms of the curvature-line parametrization at any mu != 0.

    Coefficients depend on the first coordinate only; valid for negative
    mu through the negative-parameter Jacobi reduction.
    """
    sn, cn, _ = elliptic._sn_cn_dn_any(u, mu)
    sh2 = math.sinh(r) ** 2
    am = abs(mu)
    g11 = am * (sn * sn + sh2)
    g12 = -am * math.sinh(2.0 * r) / 4.0  # coefficient of du dv is 2*g12
    g22 = am * (cn * cn + sh2)
    h11 = mu * sn * cn
    return FundamentalForms(g11, g12, g22, h11, 0.0, -h11)


def _K_any(mu: float) -> float:
    """K(mu) for mu < 1, including negative parameters."""
    if mu < 0.0:
        m1 = -mu / (1.0 - mu)
        return elliptic.complete_KE(m1)[0] / math.sqrt(1.0 - mu)
    return elliptic.complete_KE(mu)[0]


def mirror_pair_check(
    mu: float, r: float, samples: int, seed: int = 0, tol: float = 1e-8
) -> dict:
    """Verify the mirror-image identities at random points.

    Part (1), for mu < 0: the pullback of the forms at (mu, r) under the
    quarter-period change of variables, composed with the point
    reflection, reproduces the forms at (mu' = mu/(mu-1), r).  Part (2),
    for any admissible mu: flipping v reproduces the forms at (mu, -r).
    Returns a report dict; raises MirrorCheckError past `tol`.
    """
    if mu == 1.0 or mu == 0.0 or r == 0.0:
        raise ValueError("mirror check requires mu not in {0, 1} and r != 0")
    rng = random.Random(seed)
    report = {"mu": mu, "r": r, "samples": samples, "max_dev_part1": 0.0,
              "max_dev_part2": 0.0, "parts": []}

    def differ(a: FundamentalForms, b: FundamentalForms) -> float:
        return max(
            abs(a.g11 - b.g11), abs(a.g12 - b.g12), abs(a.g22 - b.g22),
            abs(a.h11 - b.h11), abs(a.h12 - b.h12), abs(a.h22 - b.h22),
        )

    # Part (2): forms of -L_{mu,r}(u,-v) vs forms of L_{mu,-r}: the pullback
    # flips the sign of g12 and fixes everything else.
    report["parts"].append("v-flip vs (mu,-r)")
    for _ in range(samples):
        u = rng.uniform(-6.0, 6.0)
        a = _ffl_forms(mu, r, u)
        flipped = FundamentalForms(a.g11, -a.g12, a.g22, a.h11, -a.h12, a.h22)
        b = _ffl_forms(mu, -r, u)
        dev = differ(flipped, b)
        report["max_dev_part2"] = max(report["max_dev_part2"], dev)
        if dev > tol:
            raise MirrorCheckError(
                f"v-flip mirror identity failed at u={u}: deviation {dev}"
            )

    # Part (1): only for mu < 0, where mu' = mu/(mu-1) lies in (0, 1).
    if mu < 0.0:
        mup = mu / (mu - 1.0)
        a2 = 1.0 / (1.0 - mu)
        Kp = _K_any(mup)
        report["parts"].append("quarter-period map vs (mu', r)")
        for _ in range(samples):
            v = rng.uniform(-6.0, 6.0)
            s = (Kp - v) / math.sqrt(1.0 - mu)
            src = _ffl_forms(mu, r, s)
            pulled = FundamentalForms(
                a2 * src.g22, a2 * src.g12, a2 * src.g11,
                a2 * src.h22, a2 * src.h12, a2 * src.h11,
            )
            tgt = _ffl_forms(mup, r, v)
            dev = differ(pulled, tgt)
            report["max_dev_part1"] = max(report["max_dev_part1"], dev)
            if dev > tol:
                raise MirrorCheckError(
                    f"quarter-period mirror identity failed at v={v}: deviation {dev}"
                )
    report["ok"] = True
    return report
