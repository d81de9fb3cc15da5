"""Phenomenological invariants: pitch, wavelength, wave number, parity,
radii, aspect ratio, plus cusp enumeration and the spatial trichotomy
(dense shell / immersed cylinder / twisted column).

Closed forms are used wherever the theory provides them; the radius that
has no closed form (outer for magnetic, inner for electric) is obtained by
optimizing the profile radius over one period.  The rationality trichotomy
is a numerical classification controlled by (tol, max_denominator), not a
mathematical statement about the exact real number.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.optimize import minimize_scalar

from . import elliptic, helicoid
from .helicoid import HelicoidClass, HelicoidParams

__all__ = [
    "Invariants",
    "SpatialClass",
    "SpatialKind",
    "NotTwistedColumnError",
    "invariants",
    "cusps",
    "is_ordinary_cusp",
    "singular_helix_count",
    "spatial_class",
]


class NotTwistedColumnError(ValueError):
    """The wave number is not an integer within tolerance."""


@dataclass(frozen=True)
class Invariants:
    """Invariant tuple of a pseudospherical helicoid.

    aspect_ratio is the parity-appropriate one (wavelength/inner radius
    for parity -1, wavelength/outer radius for parity +1); both ratios
    are exposed as well.
    """

    helicity: int
    parity: int
    pitch: float
    wavelength: float
    wave_number: float
    inner_radius: float
    outer_radius: float
    aspect_ratio: float
    aspect_ratio_inner: float
    aspect_ratio_outer: float


class SpatialKind(enum.Enum):
    DENSE_IN_SHELL = "dense_in_shell"
    IMMERSED_CYLINDER = "immersed_cylinder"
    TWISTED_COLUMN = "twisted_column"


@dataclass(frozen=True)
class SpatialClass:
    kind: SpatialKind
    rational_approx: tuple[int, int] | None = None


def _extremal_radius(p: HelicoidParams, want_max: bool) -> float:
    """Optimize the profile radius over one period (grid scan + Brent).

    The radius is smooth and has a handful of extrema per period, so a
    moderate grid brackets the optimum; the profile is periodic, so the
    refinement bracket may safely extend past the period ends.
    """
    T = helicoid.period(p)
    n = 1024
    sign = -1.0 if want_max else 1.0
    f = lambda u: sign * helicoid.profile_radius(p, u)
    best_i = min(range(n + 1), key=lambda i: f(i * T / n))
    du = T / n
    u0 = best_i * T / n
    res = minimize_scalar(f, bounds=(u0 - du, u0 + du), method="bounded",
                          options={"xatol": 1e-12})
    return sign * min(res.fun, f(u0))


def invariants(p: HelicoidParams) -> Invariants:
    """Closed-form invariants of the helicoid with parameters (mu, r)."""
    m = p.m
    sh, ch = math.sinh(p.r), math.cosh(p.r)
    sh2 = sh * sh
    s = math.sqrt(m + sh2)
    pitch = 2.0 * math.pi * ch * sh / (m + sh2)
    if p.kind is HelicoidClass.MAGNETIC:
        parity = -1
        _, E = elliptic.complete_KE(m)
        wavelength = 2.0 * (ch * ch * elliptic.complete_third(-sh2, m) - E) / s
        # The product form (CPTBis)-consistent inner radius; see ledger for
        # the radical-extent reading of the closed form.
        inner = math.sqrt(m * (1.0 - m)) / (m + sh2)
        outer = _extremal_radius(p, want_max=True)
    else:
        parity = 1
        K1, E1 = elliptic.complete_KE(1.0 / m)
        bracket = (m + ch * ch - 1.0) * K1 - m * E1 - ch * ch * elliptic.complete_third(
            -1.0 / sh2, 1.0 / m
        )
        wavelength = 2.0 * bracket / math.sqrt(m * (m + sh2))
        outer = math.sqrt(m) * ch / (m + sh2)
        inner = _extremal_radius(p, want_max=False)
    aspect_inner = wavelength / inner
    aspect_outer = wavelength / outer
    return Invariants(
        helicity=p.helicity,
        parity=parity,
        pitch=pitch,
        wavelength=wavelength,
        wave_number=pitch / wavelength,
        inner_radius=inner,
        outer_radius=outer,
        aspect_ratio=aspect_inner if parity == -1 else aspect_outer,
        aspect_ratio_inner=aspect_inner,
        aspect_ratio_outer=aspect_outer,
    )


def cusps(p: HelicoidParams, window: range, verify: bool = True) -> list[float]:
    """Cusp parameters of the planar profile for period indices in `window`.

    Magnetic profiles have one cusp per period (at the period multiples);
    electric profiles have two (period multiples and half-period points).
    With verify=True each value is checked to be an ordinary cusp.
    """
    T = helicoid.period(p)
    out: list[float] = []
    for n in window:
        if p.kind is HelicoidClass.MAGNETIC:
            out.append(n * T)
        else:
            out.extend((n * T, n * T + T / 2.0))
    out.sort()
    if verify:
        for u in out:
            if not is_ordinary_cusp(p, u):
                raise AssertionError(f"expected an ordinary cusp at u={u}")
    return out


def is_ordinary_cusp(p: HelicoidParams, u: float, step: float = 1e-6) -> bool:
    """Order-1 cusp signature: vanishing velocity, two-sided limiting
    tangent directions along a common line."""

    def dgamma(at: float) -> tuple[float, float]:
        a = helicoid.planar_profile(p, at + step)
        b = helicoid.planar_profile(p, at - step)
        return ((a[0] - b[0]) / (2 * step), (a[2] - b[2]) / (2 * step))

    vx, vz = dgamma(u)
    if math.hypot(vx, vz) > 1e-8 * max(1.0, abs(u)):
        return False
    # one-sided tangents a little away from the cusp
    off = 50 * step

    def tangent(at: float) -> tuple[float, float]:
        tx, tz = dgamma(at)
        n = math.hypot(tx, tz)
        return (tx / n, tz / n)

    t_plus = tangent(u + off)
    t_minus = tangent(u - off)
    cross = abs(t_plus[0] * t_minus[1] - t_plus[1] * t_minus[0])
    return cross < 1e-3


def singular_helix_count(p: HelicoidParams, tol: float = 1e-6) -> int:
    """Number of singular helices of a twisted column: the wave number for
    magnetic type, twice the wave number for electric type."""
    n = invariants(p).wave_number
    k = round(n)
    if k < 1 or abs(n - k) > tol:
        raise NotTwistedColumnError(
            f"wave number {n} is not an integer within {tol}; not a twisted column"
        )
    return k if p.kind is HelicoidClass.MAGNETIC else 2 * k


def spatial_class(
    p: HelicoidParams, tol: float = 1e-9, max_denominator: int = 10000
) -> SpatialClass:
    """Numerical trichotomy on the wave number.

    Integer within tol: twisted column.  Else rational p/q with
    q <= max_denominator within tol: immersed cylinder.  Else dense in the
    shell between the two coaxial cylinders.
    """
    n = invariants(p).wave_number
    nearest = int(round(n))
    if math.isinf(tol) or abs(n - nearest) < tol:
        return SpatialClass(SpatialKind.TWISTED_COLUMN, (nearest, 1))
    frac = Fraction(n).limit_denominator(max_denominator)
    if abs(n - float(frac)) < tol:
        return SpatialClass(
            SpatialKind.IMMERSED_CYLINDER, (frac.numerator, frac.denominator)
        )
    return SpatialClass(SpatialKind.DENSE_IN_SHELL, None)
