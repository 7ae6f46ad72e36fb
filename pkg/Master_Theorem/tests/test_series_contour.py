#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
구면 Fourier 급수와 윤곽 적분 표현 테스트
"""

import numpy as np
import pytest

from hardy.builtins import exp_decay
from master.contour import check_base_point, contour_f
from master.series import SeriesConfig, as_radial, series_coefficients, series_f, truncation_height
from spherical.radial import RadialPoint
from utils.errors import (
    ContinuationDomainError, DomainViolationError, RadiusError, TruncationCertificateError
)

Q = np.exp(-1.0)


def _f_h3_exp(h):
    """
    H3, a(λ) = e^{-λ}: Σ_n (-1)^{n-1} n² qⁿ sinh(2nt)/(n sinh 2t), t = h/2
    u/(1+u)² 의 해석 접속이므로 급수 반경 밖에서도 성립
    """
    t = 0.5 * h
    if t == 0:
        return Q * (1.0 - Q) / (1.0 + Q) ** 3

    def g(u):
        return u / (1.0 + u) ** 2

    return (g(Q * np.exp(2.0 * t)) - g(Q * np.exp(-2.0 * t))) / (2.0 * np.sinh(2.0 * t))


def test_series_at_origin(h3, exp1):
    result = series_f(h3, exp1, [0.0])
    assert abs(result.value - 0.0908577476729) < 1e-10
    assert abs(result.value - _f_h3_exp(0.0)) < 1e-10
    assert result.tail_bound < 0.5 * SeriesConfig().tolerance
    assert result.terms == result.height + 1


@pytest.mark.parametrize("h", [0.1, 0.3])
def test_series_closed_form(h3, exp1, h):
    assert abs(series_f(h3, exp1, [h]).value - _f_h3_exp(h)) < 1e-9


@pytest.mark.parametrize("h", [0.0, 0.3])
def test_contour_closed_form(h3, exp1, h):
    result = contour_f(h3, exp1, [h])
    assert abs(result.value - _f_h3_exp(h)) < 1e-7
    assert result.symmetrized
    assert result.sigma == (0.0,)


def test_contour_beyond_series_radius(h3, exp1):
    h = 1.6
    with pytest.raises(RadiusError):
        series_f(h3, exp1, [h])
    assert abs(contour_f(h3, exp1, [h]).value - _f_h3_exp(h)) < 1e-7


@pytest.mark.parametrize("name", ["H2", "H3", "CH2"])
def test_series_equals_contour_rank_one(name, exp1, rgamma1):
    for a in (exp1, rgamma1):
        series = series_f(name, a, [0.3]).value
        contour = contour_f(name, a, [0.3]).value
        assert abs(series - contour) < 1e-6 * max(1.0, abs(series))


def test_sigma_independence(h3, exp1):
    values = [contour_f(h3, exp1, [0.3], sigma=[s]).value for s in (-0.3, 0.0, 0.3)]
    assert max(abs(v - values[1]) for v in values) < 1e-8


def test_unsymmetrized_form(h3, ch2, exp1):
    for space in (h3, ch2):
        symmetric = contour_f(space, exp1, [0.3], sigma=[0.2]).value
        plain = contour_f(space, exp1, [0.3], sigma=[0.2], symmetrized=False).value
        assert abs(symmetric - plain) < 1e-8 * max(1.0, abs(symmetric))


def test_compact_continuation(h3, exp1):
    series = series_f(h3, exp1, RadialPoint.compact([0.8])).value
    contour = contour_f(h3, exp1, RadialPoint.compact([0.8])).value
    assert abs(series - contour) < 1e-6
    with pytest.raises(ContinuationDomainError):
        series_f(h3, exp1, RadialPoint.compact([1.7]))


def test_base_point_errors(h3, exp1):
    with pytest.raises(DomainViolationError):
        contour_f(h3, exp1, [0.3], sigma=[1.5])
    with pytest.raises(DomainViolationError):
        check_base_point(h3, [0.0, 0.0], 1.0)
    assert check_base_point(h3, [0.2], 1.0).tolist() == [0.2]


def test_truncation_height(h3, exp1):
    height, tail = truncation_height(h3, exp1, 0.0, SeriesConfig())
    assert tail < 0.5 * SeriesConfig().tolerance
    loose, _ = truncation_height(h3, exp1, 0.0, SeriesConfig(tolerance=1e-4))
    assert loose < height
    with pytest.raises(TruncationCertificateError):
        truncation_height(h3, exp1, 0.0, SeriesConfig(max_height=2))


def test_series_coefficients(h3, exp1):
    mus, coefficients = series_coefficients(h3, exp1, 3)
    expected = [(-1) ** k * (k + 1) ** 2 * np.exp(-(k + 1)) for k in range(4)]
    np.testing.assert_allclose(mus[:, 0], [0, 1, 2, 3])
    np.testing.assert_allclose(coefficients, expected, rtol=1e-14)


def test_as_radial():
    point = as_radial([0.4])
    assert isinstance(point, RadialPoint)
    assert as_radial(point) is point


@pytest.mark.slow
def test_series_equals_contour_complex_rank_two(a2c):
    a = exp_decay(P=1.0, rank=2)
    H = [0.2, 0.1]
    series = series_f(a2c, a, H).value
    contour = contour_f(a2c, a, H).value
    assert abs(series - contour) < 1e-6 * max(1.0, abs(series))
