#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
계수 1 보간 (구면 변환 = ã) 테스트

동경 프로파일 계산이 무거워 모듈 범위 픽스처로 한 번만 만듭니다.
"""

import numpy as np
import pytest

from master.interpolation import (
    calibrate, holomorphy_probe, interpolate_symm, interpolation_grid, l2_identity,
    TRUST_FACTOR, lambda_scale, radial_profile
)
from utils.errors import DomainViolationError, UnsupportedSpaceError

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def h3_profile(h3, exp1):
    return radial_profile(h3, exp1)


@pytest.fixture(scope="module")
def h2_profile(h2, exp1):
    return radial_profile(h2, exp1)


@pytest.fixture(scope="module")
def rgamma_profile(h3, rgamma1):
    return radial_profile(h3, rgamma1)


def test_calibration_constant(h3):
    kappa, lam_star = calibrate(h3)
    assert lam_star == pytest.approx(0.3 * lambda_scale(h3))
    # L² 항등식의 양변이 양수이려면 κ 는 음의 허수축 위에 있어야 함
    assert abs(kappa.real) < 1e-6 * abs(kappa)
    assert kappa.imag < 0
    assert calibrate(h3) == (kappa, lam_star)


def test_grid_shape(h3):
    grid = interpolation_grid(h3)
    assert len(grid) == 20
    scale = lambda_scale(h3)
    assert max(abs(lam.real) for lam in grid) < scale


@pytest.mark.parametrize("index", range(20))
def test_interpolation_exp(h3, exp1, h3_profile, index):
    lam = interpolation_grid(h3)[index]
    result = interpolate_symm(h3, exp1, lam, h3_profile)
    assert abs(result.ratio - 1.0) < 1e-5, f"λ={lam}: {result.ratio}"


@pytest.mark.parametrize("index", range(20))
def test_interpolation_exp_h2(h2, exp1, h2_profile, index):
    lam = interpolation_grid(h2)[index]
    result = interpolate_symm(h2, exp1, lam, h2_profile)
    assert abs(result.ratio - 1.0) < 1e-5, f"λ={lam}: {result.ratio}"


def test_profile_tail_model(h2_profile, h3_profile):
    # 모형 전환점 앞의 값은 잡음보다 충분히 큼
    for profile in (h3_profile, h2_profile):
        assert profile.model is not None
        head = profile.t < profile.switch
        assert np.all(np.abs(profile.values[head]) > TRUST_FACTOR * profile.noise[head])
        assert profile.model[1].real < 0
    # H3: f(a_t) ~ e^{-4t} / q
    assert h3_profile.model[1].real == pytest.approx(-4.0, abs=1e-2)


@pytest.mark.parametrize("lam", [0.1 + 0.5j, -0.2 + 2.0j])
def test_interpolation_reciprocal_gamma(h3, rgamma1, rgamma_profile, lam):
    result = interpolate_symm(h3, rgamma1, lam, rgamma_profile)
    assert abs(result.ratio - 1.0) < 1e-5


def test_interpolation_closed_form_rhs(h3, exp1, h3_profile):
    lam = 0.2 + 0.5j
    result = interpolate_symm(h3, exp1, lam, h3_profile)
    expected = -1j * np.sinh(lam) / np.sin(np.pi * lam)
    assert abs(result.rhs - expected) < 1e-12 * abs(expected)
    assert result.cut > 0


def test_interpolation_domain(h3, exp1, h3_profile):
    with pytest.raises(DomainViolationError):
        interpolate_symm(h3, exp1, 2.5, h3_profile)


def test_l2_identity(h3, exp1, h3_profile):
    lhs, rhs = l2_identity(h3, exp1, h3_profile)
    assert lhs.real > 0
    assert abs(lhs - rhs) < 1e-4 * abs(lhs)


def test_holomorphy(h3, exp1, h3_profile):
    probe = holomorphy_probe(h3, exp1, 0.15 + 0.7j, profile=h3_profile)
    for lhs, rhs in probe.values():
        assert abs(lhs - rhs) < 1e-4 * max(1.0, abs(rhs))
    # Cauchy-Riemann: ∂/∂y = i ∂/∂x
    real, imag = probe["real"][0], probe["imag"][0]
    assert abs(real - imag) < 1e-4 * max(1.0, abs(real))


def test_rank_two_not_supported(a2c, exp1):
    with pytest.raises(UnsupportedSpaceError):
        interpolate_symm(a2c, exp1, [0.1, 0.2])
