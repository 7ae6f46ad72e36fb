#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
수직선 구적 및 유수 계산 테스트
"""

import numpy as np
import pytest

from numerics.quadrature import (
    QuadratureConfig, composite_nodes, line_integral, check_boundary_decay,
    choose_halfwidth, residue_at, nested_residue, exponential_tail
)
from utils.errors import (
    QuadratureConfigError, DecayCertificateError, ResidueRadiusError, TailFitError
)


@pytest.fixture
def small_cfg():
    return QuadratureConfig(truncation_halfwidth=6.0, nodes_per_axis=16, panel_width=1.0)


def test_composite_nodes_exact_for_polynomials():
    nodes, weights = composite_nodes(0.0, 2.0, 16, 0.5)
    assert nodes.size == 4 * 16
    assert np.sum(weights) == pytest.approx(2.0, abs=1e-14)
    assert np.sum(weights * nodes ** 5) == pytest.approx(64.0 / 6.0, rel=1e-13)


def test_line_integral_rank_one_gaussian(small_cfg):
    # ∫_{iℝ} e^{λ²} dλ = i√π
    value = line_integral(lambda p: np.exp(p[:, 0] ** 2), 0.0, small_cfg)
    assert abs(value - 1j * np.sqrt(np.pi)) < 1e-12


def test_line_integral_shifted_base_point(small_cfg):
    # 정함수이므로 기저점을 옮겨도 값이 같음
    value = line_integral(lambda p: np.exp(p[:, 0] ** 2), 0.3, small_cfg)
    assert abs(value - 1j * np.sqrt(np.pi)) < 1e-10


def test_line_integral_rank_two_product(small_cfg):
    def f(p):
        return np.exp(p[:, 0] ** 2 + 2.0 * p[:, 1] ** 2)

    value = line_integral(f, [0.0, 0.0], small_cfg)
    expected = (1j ** 2) * np.sqrt(np.pi) * np.sqrt(np.pi / 2.0)
    assert abs(value - expected) < 1e-11


def test_boundary_decay_failure(small_cfg):
    with pytest.raises(DecayCertificateError):
        line_integral(lambda p: np.ones(p.shape[0], dtype=complex), 0.0, small_cfg)


def test_boundary_decay_reports_worst(small_cfg):
    worst = check_boundary_decay(lambda p: np.exp(p[:, 0] ** 2), 0.0, small_cfg)
    assert worst == pytest.approx(np.exp(-36.0))


def test_choose_halfwidth_meets_target():
    cfg = QuadratureConfig()

    def f(p):
        return np.exp(-2.0 * np.abs(p[:, 0].imag)).astype(complex)

    halfwidth = choose_halfwidth(f, 0.1, 2.0, 0, cfg)
    assert 10.0 * np.exp(-2.0 * halfwidth) <= 0.1 * cfg.tail_bound_target
    assert 10.0 * np.exp(-2.0 * (halfwidth - 0.5)) > 0.1 * cfg.tail_bound_target

    with pytest.raises(DecayCertificateError):
        choose_halfwidth(f, 0.1, 0.0, 0, cfg)


def test_residue_simple_pole():
    assert abs(residue_at(lambda z: 3.0 / (z - 1.0), 1.0) - 3.0) < 1e-13


def test_residue_double_pole_with_entire_factor():
    # Res_{z=0} e^z / z² = 1
    assert abs(residue_at(lambda z: np.exp(z) / z ** 2, 0.0) - 1.0) < 1e-12


def test_residue_detects_neighbouring_pole():
    def f(z):
        return 1.0 / z + 1.0 / (z - 0.08)

    with pytest.raises(ResidueRadiusError):
        residue_at(f, 0.0, radius=0.1)


def test_nested_residue_product():
    def f(p):
        return np.exp(p[:, 0]) / ((p[:, 0] - 1.0) * (p[:, 1] + 2.0))

    assert abs(nested_residue(f, [1.0, -2.0]) - np.e) < 1e-12


def test_exponential_tail_matches_integral():
    u = np.linspace(5.0, 8.0, 20)
    tail, residual = exponential_tail(u, np.exp(-u))
    assert abs(tail - np.exp(-8.0)) < 1e-14
    assert residual < 1e-10


def test_exponential_tail_oscillating():
    # ∫_U^∞ e^{(-1+2i)u} du = -e^{(-1+2i)U}/(-1+2i)
    u = np.linspace(4.0, 6.0, 40)
    rate = -1.0 + 2.0j
    tail, _ = exponential_tail(u, np.exp(rate * u))
    assert abs(tail - (-np.exp(rate * 6.0) / rate)) < 1e-12


def test_exponential_tail_negligible_window():
    tail, _ = exponential_tail(np.linspace(0.0, 1.0, 5), np.full(5, 1e-20))
    assert tail == 0


def test_exponential_tail_growth_rejected():
    u = np.linspace(0.0, 2.0, 10)
    with pytest.raises(TailFitError):
        exponential_tail(u, np.exp(u))


@pytest.mark.parametrize("kwargs", [
    {"nodes_per_axis": 8},
    {"nodes_per_axis": 16.5},
    {"truncation_halfwidth": 0.0},
    {"panel_width": -1.0},
    {"tail_bound_target": 0.0},
])
def test_quadrature_config_rejects(kwargs):
    with pytest.raises(QuadratureConfigError):
        QuadratureConfig(**kwargs)


def test_quadrature_config_with_halfwidth():
    cfg = QuadratureConfig().with_halfwidth(20)
    assert cfg.truncation_halfwidth == 20.0
    assert cfg.nodes_per_axis == QuadratureConfig().nodes_per_axis
