"""Real elliptic integrals and Jacobi elliptic functions.

Self-contained double-precision routines: complete integrals via the
arithmetic-geometric mean, incomplete integrals via Carlson's symmetric
(duplication-theorem) forms, and the Jacobi amplitude via a descending
Landen angle recursion.  Conventions follow the *parameter* m = k^2
throughout, never the modulus k.

Incomplete integrals take m < 1; the core Jacobi routines take m in (0, 1)
and reduce m > 1 through the reciprocal-parameter identities

    sn(u, m) = sn(u*sqrt(m), 1/m) / sqrt(m)
    cn(u, m) = dn(u*sqrt(m), 1/m)
    dn(u, m) = cn(u*sqrt(m), 1/m)

and m < 0 through the negative-parameter identities (with m1 = -m/(1-m))

    sn(u, m) = sd(u*sqrt(1-m), m1) / sqrt(1-m)
    cn(u, m) = cd(u*sqrt(1-m), m1)
    dn(u, m) = nd(u*sqrt(1-m), m1).

All quasi-periodic extensions (F, E, Pi in phi; am, eps, Pi(am) in u) are
built in, so every function accepts unbounded real arguments.
"""

from __future__ import annotations

import math

__all__ = [
    "complete_KE",
    "complete_third",
    "incomplete_first",
    "incomplete_second",
    "incomplete_third",
    "amplitude",
    "jacobi_sn_cn_dn",
    "epsilon_fn",
    "pi_fn",
]

# AGM / Carlson iterations stop at this relative agreement; the public
# accuracy contract is 1e-12.
_INTERNAL_TOL = 1e-15

_EPS = 2.220446049250313e-16


def _check_m_unit(m: float) -> None:
    if not 0.0 <= m < 1.0:
        raise ValueError(f"parameter m must lie in [0, 1), got {m}")


def _check_char(n: float) -> None:
    if n >= 1.0:
        raise ValueError(f"characteristic n must be < 1, got {n}")


# ---------------------------------------------------------------------------
# Complete integrals (AGM)
# ---------------------------------------------------------------------------


def _agm_KE(m: float) -> tuple[float, float]:
    """K(m) and E(m) for m < 1 by the arithmetic-geometric mean."""
    if m == 0.0:
        return math.pi / 2, math.pi / 2
    a, b = 1.0, math.sqrt(1.0 - m)
    c2_sum = 0.5 * m  # 2^(n-1) * c_n^2 accumulated, n = 0 term
    pow2 = 1.0
    for _ in range(64):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        pow2 *= 2.0
        c2_sum += 0.5 * pow2 * c * c
        if abs(c) <= _INTERNAL_TOL * a:
            break
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - c2_sum)


def complete_KE(m: float) -> tuple[float, float]:
    """Complete elliptic integrals (K(m), E(m)) of the first and second kind.

    Args:
        m: parameter in [0, 1).  K diverges as m -> 1.

    Returns:
        (K, E) with K = F(pi/2, m) and E = E(pi/2, m).
    """
    _check_m_unit(m)
    return _agm_KE(m)


def complete_third(n: float, m: float) -> float:
    """Complete elliptic integral of the third kind Pi(n, m), n < 1."""
    _check_m_unit(m)
    _check_char(n)
    if n == 0.0:
        return _agm_KE(m)[0]
    K = _rf(0.0, 1.0 - m, 1.0)
    return K + (n / 3.0) * _rj(0.0, 1.0 - m, 1.0, 1.0 - n)


# ---------------------------------------------------------------------------
# Carlson symmetric forms (duplication algorithm, Carlson 1995)
# ---------------------------------------------------------------------------


def _rf(x: float, y: float, z: float) -> float:
    A = (x + y + z) / 3.0
    Q = (3.0 * _EPS) ** (-1.0 / 8.0) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    while Q >= abs(A) * f:
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
        A = (A + lam) / 4.0
        f *= 4.0
    # A is now A0/f with f = 4^n; recover the scaled deviations
    X = (x + y + z) / 3.0 - x
    Y = (x + y + z) / 3.0 - y
    X /= A
    Y /= A
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    s = (
        1.0
        - E2 / 10.0
        + E3 / 14.0
        + E2 * E2 / 24.0
        - 3.0 * E2 * E3 / 44.0
        - 5.0 * E2 * E2 * E2 / 208.0
        + 3.0 * E3 * E3 / 104.0
        + E2 * E2 * E3 / 16.0
    )
    return s / math.sqrt(A)


def _rc(x: float, y: float) -> float:
    """R_C(x, y) = R_F(x, y, y) for x >= 0, y > 0 (y < 0 not needed here)."""
    if y <= 0.0:
        raise ValueError("R_C requires y > 0 on this branch")
    if x == y:
        return 1.0 / math.sqrt(x)
    if x < y:
        d = math.sqrt(y - x)
        return math.atan(d / math.sqrt(x)) / d if x > 0.0 else math.pi / (2.0 * math.sqrt(y))
    d = math.sqrt(x - y)
    return math.log((math.sqrt(x) + d) / math.sqrt(y)) / d


def _rd(x: float, y: float, z: float) -> float:
    A = (x + y + 3.0 * z) / 5.0
    Q = (0.25 * _EPS) ** (-1.0 / 8.0) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    acc = 0.0
    while Q >= abs(A) * f:
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        acc += 1.0 / (f * sz * (z + lam))
        x, y, z = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0
        A = (A + lam) / 4.0
        f *= 4.0
    X = ((x + y + 3.0 * z) / 5.0 - x) / A
    Y = ((x + y + 3.0 * z) / 5.0 - y) / A
    Z = -(X + Y) / 3.0
    E2 = X * Y - 6.0 * Z * Z
    E3 = (3.0 * X * Y - 8.0 * Z * Z) * Z
    E4 = 3.0 * (X * Y - Z * Z) * Z * Z
    E5 = X * Y * Z * Z * Z
    s = (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
    )
    return s / (f * A * math.sqrt(A)) + 3.0 * acc


def _rj(x: float, y: float, z: float, p: float) -> float:
    A = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    Q = (0.2 * _EPS) ** (-1.0 / 8.0) * max(
        abs(A - x), abs(A - y), abs(A - z), abs(A - p)
    )
    f = 1.0
    acc = 0.0
    while Q >= abs(A) * f:
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        lam = sx * (sy + sz) + sy * sz
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = delta / (d * d)
        if -1.5 < e < -0.5:
            # e near -1 makes RC(1, 1+e) ill-conditioned; use the equivalent
            # argument pair from the duplicated variables instead.
            acc += _rc(1.0, 2.0 * sp * (p + sx * (sy + sz) + sy * sz) / d) / (f * d)
        else:
            acc += _rc(1.0, 1.0 + e) / (f * d)
        x, y, z, p = (x + lam) / 4.0, (y + lam) / 4.0, (z + lam) / 4.0, (p + lam) / 4.0
        A = (A + lam) / 4.0
        f *= 4.0
        delta /= 64.0
    X = ((x + y + z + 2.0 * p) / 5.0 - x) / A
    Y = ((x + y + z + 2.0 * p) / 5.0 - y) / A
    Z = ((x + y + z + 2.0 * p) / 5.0 - z) / A
    P = -(X + Y + Z) / 2.0
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P * P * P
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P * P * P) * P
    E5 = X * Y * Z * P * P
    s = (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
    )
    return s / (f * A * math.sqrt(A)) + 6.0 * acc


# ---------------------------------------------------------------------------
# Incomplete integrals
# ---------------------------------------------------------------------------


def _reduce_phi(phi: float) -> tuple[int, float]:
    """Split phi = j*pi + phi0 with phi0 in [-pi/2, pi/2]."""
    j = round(phi / math.pi)
    return j, phi - j * math.pi


def incomplete_first(phi: float, m: float) -> float:
    """Incomplete integral of the first kind F(phi, m), any real phi.

    Extended beyond |phi| <= pi/2 through F(phi + pi, m) = F(phi, m) + 2K(m).
    """
    _check_m_unit(m)
    if m == 0.0:
        return phi
    j, p0 = _reduce_phi(phi)
    s, c = math.sin(p0), math.cos(p0)
    val = s * _rf(c * c, 1.0 - m * s * s, 1.0)
    if j:
        val += 2.0 * j * _agm_KE(m)[0]
    return val


def incomplete_second(phi: float, m: float) -> float:
    """Incomplete integral of the second kind E(phi, m), any real phi."""
    _check_m_unit(m)
    if m == 0.0:
        return phi
    j, p0 = _reduce_phi(phi)
    s, c = math.sin(p0), math.cos(p0)
    y = 1.0 - m * s * s
    val = s * _rf(c * c, y, 1.0) - (m / 3.0) * s * s * s * _rd(c * c, y, 1.0)
    if j:
        val += 2.0 * j * _agm_KE(m)[1]
    return val


def incomplete_third(n: float, phi: float, m: float) -> float:
    """Incomplete integral of the third kind Pi(n, phi, m), n < 1, any phi."""
    _check_m_unit(m)
    _check_char(n)
    if n == 0.0:
        return incomplete_first(phi, m)
    j, p0 = _reduce_phi(phi)
    s, c = math.sin(p0), math.cos(p0)
    y = 1.0 - m * s * s
    s3 = s * s * s
    val = s * _rf(c * c, y, 1.0) + (n / 3.0) * s3 * _rj(c * c, y, 1.0, 1.0 - n * s * s)
    if j:
        val += 2.0 * j * complete_third(n, m)
    return val


# ---------------------------------------------------------------------------
# Jacobi amplitude and elliptic functions
# ---------------------------------------------------------------------------


def _am_unit(u: float, m: float) -> float:
    """am(u, m) for m in (0, 1) by the descending Landen angle recursion.

    u is first reduced modulo the real quarter period so the recursion
    never sees a large angle; am(u + 2K) = am(u) + pi restores the branch.
    """
    K = _agm_KE(m)[0]
    j = math.floor(u / (2.0 * K) + 0.5)
    u0 = u - 2.0 * K * j

    a, b = 1.0, math.sqrt(1.0 - m)
    ratios = []
    for _ in range(64):
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        cn = 0.5 * (a - b)
        a, b = an, bn
        ratios.append(cn / an)
        if abs(cn) <= _INTERNAL_TOL * an:
            break
    phi = (2.0 ** len(ratios)) * a * u0
    for r in reversed(ratios):
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, r * math.sin(phi)))))
    return phi + j * math.pi


def amplitude(u: float, m: float) -> float:
    """Jacobi amplitude am(u, m), the inverse of F(., m), for any real u.

    m in (0, 1) is the quasi-periodic core case (am(u + 2K) = am(u) + pi).
    m = 0 and m = 1 return the trigonometric/hyperbolic limits.  m > 1
    gives the bounded oscillation |am| <= asin(1/sqrt(m)) via the
    reciprocal-parameter reduction, and m < 0 is reduced to the core case
    through the negative-parameter identities.
    """
    if m == 0.0:
        return u
    if m == 1.0:
        return math.asin(math.tanh(u))
    if 0.0 < m < 1.0:
        return _am_unit(u, m)
    if m > 1.0:
        sn, _, _ = jacobi_sn_cn_dn(u, m)
        return math.asin(max(-1.0, min(1.0, sn)))
    # m < 0: reduce into [-K, K] where |am| <= pi/2, then arcsin(sn).
    m1 = -m / (1.0 - m)
    K = _agm_KE(m1)[0] / math.sqrt(1.0 - m)
    j = math.floor(u / (2.0 * K) + 0.5)
    u0 = u - 2.0 * K * j
    sn, _, _ = _sn_cn_dn_any(u0, m)
    return j * math.pi + math.asin(max(-1.0, min(1.0, sn)))


def jacobi_sn_cn_dn(u: float, m: float) -> tuple[float, float, float]:
    """Jacobi elliptic functions (sn, cn, dn) at parameter m >= 0.

    m in (0, 1) is evaluated directly; m > 1 through the reciprocal
    transform; m = 0 and m = 1 as closed trigonometric/hyperbolic forms.
    """
    if m < 0.0:
        raise ValueError(f"jacobi_sn_cn_dn requires m >= 0, got {m}")
    return _sn_cn_dn_any(u, m)


def _sn_cn_dn_any(u: float, m: float) -> tuple[float, float, float]:
    """(sn, cn, dn) for any real parameter, including m < 0."""
    if m == 0.0:
        return math.sin(u), math.cos(u), 1.0
    if m == 1.0:
        t = math.tanh(u)
        s = 1.0 / math.cosh(u)
        return t, s, s
    if 0.0 < m < 1.0:
        phi = _am_unit(u, m)
        sn, cn = math.sin(phi), math.cos(phi)
        # dn^2 = cn^2 + (1-m) sn^2 avoids cancellation near m -> 1.
        dn = math.sqrt(cn * cn + (1.0 - m) * sn * sn)
        return sn, cn, dn
    if m > 1.0:
        rm = math.sqrt(m)
        sn1, cn1, dn1 = _sn_cn_dn_any(u * rm, 1.0 / m)
        return sn1 / rm, dn1, cn1
    # m < 0
    m1 = -m / (1.0 - m)
    w = u * math.sqrt(1.0 - m)
    sn1, cn1, dn1 = _sn_cn_dn_any(w, m1)
    return sn1 / (dn1 * math.sqrt(1.0 - m)), cn1 / dn1, 1.0 / dn1


def epsilon_fn(u: float, m: float) -> float:
    """Jacobi epsilon E(am(u, m), m) for any real u, m in (0, 1).

    Quasi-periodic: eps(u + 2K) = eps(u) + 2E(m).
    """
    if not 0.0 < m < 1.0:
        raise ValueError(f"epsilon_fn requires m in (0, 1), got {m}")
    return incomplete_second(_am_unit(u, m), m)


def pi_fn(n: float, u: float, m: float) -> float:
    """Pi(n, am(u, m), m) for any real u, with n < 1 and m in (0, 1).

    Quasi-periodic in u with additive step 2*Pi(n, m) per 2K(m).
    """
    if not 0.0 < m < 1.0:
        raise ValueError(f"pi_fn requires m in (0, 1), got {m}")
    return incomplete_third(n, _am_unit(u, m), m)
