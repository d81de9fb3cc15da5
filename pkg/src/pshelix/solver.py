"""Inverse problem: parameters (mu, r) from prescribed invariants.

Given helicity, parity, wave number n and aspect ratio d, the two modular
conditions (pitch = n * wavelength, aspect ratio = d) collapse to a single
strictly increasing real-analytic function h_{n,d} of the Jacobi parameter
y, whose unique zero determines everything:

* parity -1 (magnetic): y = m in (0, 1), r = arcsinh(d*n*sqrt(y(1-y))/pi)/2;
* parity +1 (electric): y = m in (1, oo), r = arcsinh(n*sqrt(y)*d/(2*pi)).

Helicity never enters the root-finding; it is carried through to the
resulting parameters.  Non-integer wave numbers are accepted: the same
formulas parametrize immersed-cylinder and dense helicoids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .helicoid import HelicoidParams
from . import elliptic

__all__ = ["SolveRequest", "SolveResult", "r_of_m", "h_fn", "solve", "series_table"]

_XTOL = 1e-14
_RTOL = 8.9e-16  # ~4 ulp, brentq minimum
_MAX_DOUBLINGS = 100


@dataclass(frozen=True)
class SolveRequest:
    helicity: int
    parity: int
    wave_number: float
    aspect_ratio: float

    def __post_init__(self) -> None:
        if self.helicity not in (-1, 1):
            raise ValueError("helicity must be +1 or -1")
        if self.parity not in (-1, 1):
            raise ValueError("parity must be +1 or -1")
        if not (self.wave_number > 0.0 and math.isfinite(self.wave_number)):
            raise ValueError("wave_number must be positive and finite")
        if not (self.aspect_ratio > 0.0 and math.isfinite(self.aspect_ratio)):
            raise ValueError("aspect_ratio must be positive and finite")


@dataclass(frozen=True)
class SolveResult:
    mu: float
    r: float
    m_root: float
    residual: float
    iterations: int

    def params(self, helicity: int = -1) -> HelicoidParams:
        return HelicoidParams(self.mu, self.r, helicity)


def r_of_m(parity: int, n: float, d: float, y: float) -> float:
    """Boost parameter r forced by the wave-number/aspect-ratio conditions."""
    if parity == -1:
        if not 0.0 < y < 1.0:
            raise ValueError(f"magnetic branch needs y in (0,1), got {y}")
        return 0.5 * math.asinh(d * n * math.sqrt(y * (1.0 - y)) / math.pi)
    if y <= 0.0:
        raise ValueError(f"electric branch needs y > 0, got {y}")
    return math.asinh(n * math.sqrt(y) * d / (2.0 * math.pi))


def h_fn(parity: int, n: float, d: float, y: float) -> float:
    """The strictly increasing root function h_{n,d}(y) for the given parity.

    Magnetic: defined on (0,1); h -> -2*d*pi/sqrt(n^2 d^2 + 4 pi^2) as
    y -> 0+ and +oo as y -> 1-.  Electric: defined on (0, oo) with the
    unique zero in (1, oo); only that interval is ever evaluated here.
    """
    r = r_of_m(parity, n, d, y)
    if parity == -1:
        sh2 = math.sinh(r) ** 2
        return (
            -2.0 * elliptic.complete_KE(y)[1]
            + 2.0 * math.cosh(r) ** 2 * elliptic.complete_third(-sh2, y)
            - d * math.sqrt(y * (1.0 - y) / (y + sh2))
        )
    pi2 = math.pi * math.pi
    dn2 = d * d * n * n
    K1, E1 = elliptic.complete_KE(1.0 / y)
    return (
        2.0 * d * pi2 * math.sqrt(dn2 * y * y + 4.0 * pi2 * y) / math.sqrt(dn2 + 4.0 * pi2)
        + 4.0 * y * pi2 * E1
        - y * (dn2 + 4.0 * pi2) * K1
        + (dn2 * y + 4.0 * pi2) * elliptic.complete_third(-4.0 * pi2 / (dn2 * y), 1.0 / y)
    )


def solve(req: SolveRequest) -> SolveResult:
    """Unique (mu, r) with the requested parity, wave number, aspect ratio."""
    n, d = req.wave_number, req.aspect_ratio
    f = lambda y: h_fn(req.parity, n, d, y)
    if req.parity == -1:
        lo, hi = 1e-6, 1.0 - 1e-9
        # h is negative near 0; shrink the upper end toward 1 if the bracket
        # ever fails to straddle (h -> +oo as y -> 1-).
        shrink = 0
        while f(lo) * f(hi) > 0.0:
            hi = 1.0 - (1.0 - hi) / 8.0
            shrink += 1
            if shrink > _MAX_DOUBLINGS:
                raise ArithmeticError("magnetic bracket failed; h never changed sign")
    else:
        lo, hi = 1.0 + 1e-9, 2.0
        doublings = 0
        while f(lo) * f(hi) > 0.0:
            hi *= 2.0
            doublings += 1
            if doublings > _MAX_DOUBLINGS:
                raise ArithmeticError("electric bracket failed; h never changed sign")
    y, info = brentq(f, lo, hi, xtol=_XTOL, rtol=_RTOL, maxiter=200, full_output=True)
    resid = abs(f(y))
    if not math.isfinite(resid):
        raise ArithmeticError(f"non-finite h at solved y={y}")
    return SolveResult(
        mu=1.0 / y,
        r=r_of_m(req.parity, n, d, y),
        m_root=y,
        residual=resid,
        iterations=info.iterations,
    )


def series_table(
    parity: int, d: float, n_max: int, helicity: int = -1
) -> list[dict]:
    """Rows (n, mu, r, pitch, wavelength) for wave numbers 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    from .invariants import invariants as compute_invariants

    rows = []
    for n in range(1, n_max + 1):
        res = solve(SolveRequest(helicity, parity, float(n), d))
        iv = compute_invariants(res.params(helicity))
        rows.append(
            {
                "n": n,
                "mu": res.mu,
                "r": res.r,
                "pitch": iv.pitch,
                "wavelength": iv.wavelength,
            }
        )
    return rows
