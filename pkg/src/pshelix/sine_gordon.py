"""Traveling-wave potentials of the sine-Gordon equation.

The three branches of the one-phase traveling wave, parametrized by
(mu, r), plus a finite-difference residual checker for
phi_ss - phi_tt - sin(phi).  The mu < 0 and mu > 1 branches exercise the
negative-parameter and reciprocal-parameter paths of the Jacobi amplitude,
which makes the residual check a cheap global test of the elliptic core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import elliptic

__all__ = ["PotentialParams", "potential", "sg_residual"]


@dataclass(frozen=True)
class PotentialParams:
    """Traveling-wave parameters (mu, r); mu = 0 is excluded."""

    mu: float
    r: float

    def __post_init__(self) -> None:
        if self.mu == 0.0:
            raise ValueError("traveling-wave parameter mu must be nonzero")


def potential(p: PotentialParams, s: float, t: float) -> float:
    """Evaluate the traveling-wave potential phi_{mu,r}(s, t).

    Branches: mu < 0 uses the wave argument (cosh(r) s + sinh(r) t);
    mu = 1 is the kink -4 arctan(exp(r s + sqrt(1+r^2) t)) + pi;
    mu > 0, mu != 1 uses (sinh(r) s + cosh(r) t).  Amplitudes at mu > 1
    and mu < 0 go through the parameter reductions in the elliptic core.
    """
    mu, r = p.mu, p.r
    if mu == 1.0:
        return -4.0 * math.atan(math.exp(r * s + math.sqrt(1.0 + r * r) * t)) + math.pi
    if mu < 0.0:
        w = (math.cosh(r) * s + math.sinh(r) * t) / math.sqrt(-mu)
    else:
        w = (math.sinh(r) * s + math.cosh(r) * t) / math.sqrt(mu)
    return -2.0 * elliptic.amplitude(w, mu)


def sg_residual(p: PotentialParams, s: float, t: float, h: float = 1e-3) -> float:
    """Central-difference estimate of phi_ss - phi_tt - sin(phi) at (s, t).

    O(h^2) accurate; an exact solution drives this to stencil noise.
    """
    if h <= 0.0:
        raise ValueError("stencil step h must be positive")
    c = potential(p, s, t)
    dss = (potential(p, s + h, t) - 2.0 * c + potential(p, s - h, t)) / (h * h)
    dtt = (potential(p, s, t + h) - 2.0 * c + potential(p, s, t - h)) / (h * h)
    return dss - dtt - math.sin(c)
