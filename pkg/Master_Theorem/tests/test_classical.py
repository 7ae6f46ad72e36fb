#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
고전 1변수 정리 테스트
"""

import numpy as np
import pytest

from master.classical import classical_contour, classical_interpolate, classical_series
from utils.errors import DomainViolationError, RadiusError


def _f_exp(x):
    # a(λ) = e^{-λ}: Σ (-x/e)^k
    return 1.0 / (1.0 + x / np.e)


@pytest.mark.parametrize("x", [0.2, 1.0, 2.0])
def test_series_matches_closed_form(exp1, rgamma1, x):
    assert abs(classical_series(exp1, x) - _f_exp(x)) < 1e-9
    assert abs(classical_series(rgamma1, x) - np.exp(-x)) < 1e-9


def test_series_radius(exp1):
    with pytest.raises(RadiusError):
        classical_series(exp1, 3.0)
    with pytest.raises(RadiusError):
        classical_series(exp1, 0.0)


@pytest.mark.parametrize("sigma", [-0.2, -0.5, -0.8])
def test_contour_matches_series(exp1, sigma):
    for x in (0.5, 2.0):
        assert abs(classical_contour(exp1, x, sigma) - classical_series(exp1, x)) < 1e-8


def test_contour_beyond_radius(exp1, rgamma1):
    # x = 10 은 급수 반경 e 밖
    value = classical_contour(exp1, 10.0)
    assert abs(value - 0.2137303) < 1e-7
    assert abs(value - _f_exp(10.0)) < 1e-8
    assert abs(classical_contour(rgamma1, 4.0) - np.exp(-4.0)) < 1e-8


@pytest.mark.parametrize("sigma", [0.0, -1.0, 0.3])
def test_contour_base_point_domain(exp1, sigma):
    with pytest.raises(DomainViolationError):
        classical_contour(exp1, 1.0, sigma)


def test_contour_rejects_nonpositive_x(exp1):
    with pytest.raises(DomainViolationError):
        classical_contour(exp1, -1.0)


@pytest.mark.parametrize("lam", [0.2, 0.5 + 0.3j, 0.8 - 0.5j])
def test_interpolation(exp1, rgamma1, lam):
    for a in (exp1, rgamma1):
        result = classical_interpolate(a, lam)
        assert abs(result.lhs - result.rhs) < 1e-8 * max(1.0, abs(result.rhs))
        assert abs(result.rhs_gamma - result.rhs) < 1e-10 * abs(result.rhs)


def test_interpolation_closed_form(exp1):
    lam = 0.4 + 0.2j
    result = classical_interpolate(exp1, lam)
    expected = -np.pi * np.exp(-lam) / np.sin(np.pi * lam)
    assert abs(result.rhs - expected) < 1e-12 * abs(expected)
    assert result.split == 1.0


@pytest.mark.parametrize("lam", [0.0, 1.0, -0.3 + 1j, 1.5])
def test_interpolation_strip(exp1, lam):
    with pytest.raises(DomainViolationError):
        classical_interpolate(exp1, lam)
