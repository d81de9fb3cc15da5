"""Adaptive-quadrature oracle for the elliptic routines (test support).

Evaluates the defining integrals directly with scipy's adaptive
quadrature, independent of the AGM/Carlson code paths, so the test suite
has a second opinion.  Not part of the public API.
"""

from __future__ import annotations

import math
import warnings

from scipy.integrate import IntegrationWarning, quad

_QUAD_KW = dict(epsabs=1e-14, epsrel=1e-14, limit=300)


def _quad(f, a: float, b: float) -> float:
    # the e-14 tolerances intentionally push quad to its roundoff floor
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, _ = quad(f, a, b, **_QUAD_KW)
    return val


def F_quad(phi: float, m: float) -> float:
    return _quad(lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2), 0.0, phi)


def E_quad(phi: float, m: float) -> float:
    return _quad(lambda t: math.sqrt(1.0 - m * math.sin(t) ** 2), 0.0, phi)


def Pi_quad(n: float, phi: float, m: float) -> float:
    return _quad(
        lambda t: 1.0
        / ((1.0 - n * math.sin(t) ** 2) * math.sqrt(1.0 - m * math.sin(t) ** 2)),
        0.0,
        phi,
    )


def K_quad(m: float) -> float:
    return F_quad(math.pi / 2.0, m)


def E_complete_quad(m: float) -> float:
    return E_quad(math.pi / 2.0, m)


def Pi_complete_quad(n: float, m: float) -> float:
    return Pi_quad(n, math.pi / 2.0, m)


def amplitude_quad(u: float, m: float, tol: float = 1e-13) -> float:
    """Invert F(., m) by bisection on the quadrature oracle (m in (0, 1))."""
    # F' lies in [1, 1/sqrt(1-m)], so am(u) lies between u*sqrt(1-m) and u
    a, b = u * math.sqrt(1.0 - m), float(u)
    lo, hi = min(a, b) - 1.0, max(a, b) + 1.0
    assert F_quad(lo, m) <= u <= F_quad(hi, m), "bracket failure in amplitude oracle"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if F_quad(mid, m) <= u:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
