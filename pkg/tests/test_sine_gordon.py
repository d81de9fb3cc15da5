import math
import random

import pytest

from pshelix.sine_gordon import PotentialParams, potential, sg_residual

# potential(mu=2, r=0.4) at (1, 0.5), frozen from the inverse-F oracle
# composed with the reciprocal-parameter reduction
POT_MU2 = -1.1655221391594603


def test_mu_zero_rejected():
    with pytest.raises(ValueError):
        PotentialParams(0.0, 0.3)


def test_kink_zero_on_ridge():
    # exponent zero: -4*arctan(1) + pi = 0
    p = PotentialParams(1.0, 0.7)
    t = 0.31
    s = -math.sqrt(1 + 0.7**2) * t / 0.7
    assert potential(p, s, t) == pytest.approx(0.0, abs=1e-12)


def test_origin_zero_for_amplitude_branches():
    assert potential(PotentialParams(0.5, 0.3), 0.0, 0.0) == 0.0
    assert potential(PotentialParams(-2.0, 0.3), 0.0, 0.0) == 0.0


def test_frozen_value_reciprocal_branch():
    assert potential(PotentialParams(2.0, 0.4), 1.0, 0.5) == pytest.approx(
        POT_MU2, abs=1e-12
    )


def test_residual_grid_kink():
    p = PotentialParams(1.0, 0.2)
    for i in range(5):
        for j in range(5):
            s, t = -1.0 + 0.5 * i, -1.0 + 0.5 * j
            assert abs(sg_residual(p, s, t)) < 1e-6


def test_residual_specific_point():
    assert abs(sg_residual(PotentialParams(0.7, 0.3), 0.4, -0.2)) < 1e-6


def test_residual_randomized_all_branches():
    rng = random.Random(7)
    branches = [
        lambda: rng.uniform(-4.0, -0.1),
        lambda: 1.0,
        lambda: rng.uniform(0.1, 0.95),
        lambda: rng.uniform(1.05, 4.0),
    ]
    for k in range(50):
        mu = branches[k % 4]()
        p = PotentialParams(mu, rng.uniform(0.05, 1.5))
        s, t = rng.uniform(-2, 2), rng.uniform(-2, 2)
        assert abs(sg_residual(p, s, t)) < 1e-6, (mu, p.r, s, t)


def test_residual_second_order_in_h():
    # the truncation term scales like h^2: halving h shrinks it ~4x
    p = PotentialParams(0.6, 0.4)
    s, t = 0.8, -0.3
    r1 = sg_residual(p, s, t, h=2e-3)
    r2 = sg_residual(p, s, t, h=1e-3)
    assert abs(r2) < abs(r1)
    assert abs(r1 / r2) == pytest.approx(4.0, rel=0.2)


def test_wave_quasi_periodicity():
    # moving one full period of the amplitude argument along the wave
    # direction shifts the potential by -2*pi
    from pshelix import elliptic

    mu, r = 0.7, 0.3
    p = PotentialParams(mu, r)
    K = elliptic.complete_KE(mu)[0]
    # wave argument w = (sinh r s + cosh r t)/sqrt(mu); step s so w -> w + 2K
    ds = 2 * K * math.sqrt(mu) / math.sinh(r)
    for (s, t) in ((0.0, 0.0), (0.4, -0.1)):
        assert potential(p, s + ds, t) - potential(p, s, t) == pytest.approx(
            -2 * math.pi, abs=1e-9
        )


def test_residual_rejects_bad_step():
    with pytest.raises(ValueError):
        sg_residual(PotentialParams(0.5, 0.2), 0.0, 0.0, h=0.0)
