#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
직사각형 윤곽 반복 (계수 1)

비대칭화 피적분 함수 g(λ) = a(λ) b(λ) φ_λ(exp H) / (c(λ)c(-λ)) 를
꼭짓점 σ ± iY, R_N ± iY (R_N = ρ + N - 1/2) 인 직사각형 C_N 위에서 적분합니다.
b 의 극 μ+ρ (μ < N) 에서의 유수는 (-1)^μ d(μ) a(μ+ρ) φ_{μ+ρ} / (-2πi) 이므로

    ∮_{C_N} g dλ = 2πi Σ_{μ<N} Res = -S_N

이고, 왼쪽 변 적분은 S_N + (아래 + 오른쪽 + 위) 로 나뉩니다.
나머지 변의 기여가 N 에 대해 줄어드는 것이 급수 수렴의 윤곽 쪽 설명입니다.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from bfunction.symmetrize import unsymmetrized_factor
from config.settings import QUAD_CONFIG, TOLERANCE_CONFIG
from numerics.quadrature import composite_nodes
from master.contour import check_base_point, contour_f
from master.series import as_radial, series_coefficients
from master.space import as_space
from utils.errors import UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)

# 직사각형 높이와 위쪽 변 감쇠 적합 높이
RECTANGLE_HEIGHT = 10.0
SIDE_HEIGHTS = np.arange(4.0, 12.5, 1.0)


@dataclass
class ContourIterationResult:
    """contour_iteration 결과"""
    space: str
    hardy: str
    sigma: float
    orders: list
    partial_sums: list
    closed_integrals: list
    residue_residuals: list
    errors: list
    monotone: bool
    side_slope: float
    expected_side_slope: float
    error_rate: float
    expected_error_rate: float
    tail_start: int = 1
    prefactor_degree: float = 0.0
    reference: complex = 0.0j
    notes: list = field(default_factory=list)

    @property
    def side_slope_error(self):
        return abs(self.side_slope - self.expected_side_slope) / abs(self.expected_side_slope)

    @property
    def rate_error(self):
        return abs(self.error_rate - self.expected_error_rate)


def _horizontal(g, lower, upper, y):
    """Im λ = y 에서 Re λ: lower → upper"""
    x, w = composite_nodes(lower, upper, QUAD_CONFIG["NODES_PER_AXIS"], QUAD_CONFIG["PANEL_WIDTH"])
    return complex(np.sum(w * g((x + 1j * y)[:, None])))


def _vertical(g, x, height):
    """Re λ = x 에서 Im λ: -height → height (dλ = i dy)"""
    y, w = composite_nodes(-height, height, QUAD_CONFIG["NODES_PER_AXIS"], QUAD_CONFIG["PANEL_WIDTH"])
    return complex(1j * np.sum(w * g((x + 1j * y)[:, None])))


def rectangle_integral(g, sigma, right, height):
    """반시계 방향 ∮ g dλ 와 왼쪽 변 (위쪽 방향) 적분"""
    bottom = _horizontal(g, sigma, right, -height)
    right_side = _vertical(g, right, height)
    top = -_horizontal(g, sigma, right, height)
    left = _vertical(g, sigma, height)
    return bottom + right_side + top - left, left


def _slope(x, values):
    return float(np.polyfit(np.asarray(x, dtype=float), np.asarray(values, dtype=float), 1)[0])


def _tail_rate(orders, errors):
    """
    log|e_n| = c + r n + p log n 최소제곱 적합

    Returns:
        tuple: (r, p)
    """
    n = np.asarray(orders, dtype=float)
    design = np.column_stack([np.ones_like(n), n, np.log(n)])
    (_, rate, degree), *_ = np.linalg.lstsq(design, np.log(np.maximum(np.asarray(errors, dtype=float), 1e-300)), rcond=None)
    return float(rate), float(degree)


def contour_iteration(space, a, H, N=12, sigma=-0.25, height=RECTANGLE_HEIGHT):
    """
    N = 1..N 직사각형의 유수 정리, 부분합 오차 단조 감소, 위쪽 변 감쇠 기울기 확인

    Args:
        space: 계수 1 공간
        a: HardyFunction
        H: RadialPoint 또는 h 배열
        N: 최대 직사각형 차수 (항 크기 최대점 뒤로 세 점 이상 필요)
        sigma: 왼쪽 변의 실수부 (B(T_δ) 안)

    Returns:
        ContourIterationResult

    Raises:
        UnsupportedSpaceError: 계수 1 이 아닌 공간
        DomainViolationError: σ ∉ B(T_δ)
    """
    space = as_space(space)
    if space.rank != 1:
        raise UnsupportedSpaceError(f"{space.name}: 직사각형 윤곽 반복은 계수 1 에서만 지원합니다")
    evaluator = space.require_evaluator()
    a.require_certified()
    cert = a.certificate
    sigma = float(check_base_point(space, [sigma], cert.delta)[0])
    radial = as_radial(H)
    rho = float(space.datum.rho_coords[0])

    def g(points):
        points = np.asarray(points, dtype=complex)
        return unsymmetrized_factor(space.bfunction, a, points) * evaluator.phi(points, radial)

    _, coefficients = series_coefficients(space, a, N - 1)
    terms = coefficients * evaluator.phi(np.arange(N, dtype=float)[:, None] + rho, radial)
    partial = np.cumsum(terms)
    reference = contour_f(space, a, radial, sigma=[sigma], symmetrized=False).value

    orders, sums, closed, residuals, errors = [], [], [], [], []
    for n in range(1, N + 1):
        loop, _ = rectangle_integral(g, sigma, rho + n - 0.5, height)
        s_n = complex(partial[n - 1])
        orders.append(n)
        sums.append(s_n)
        closed.append(loop)
        residuals.append(abs(loop + s_n) / max(1.0, abs(s_n)))
        errors.append(abs(reference - s_n))
    # 항 크기 최대점 뒤, 뒤쪽 절반만 점근 구간
    peak = int(np.argmax(np.abs(terms)))
    tail = [k for k, n in enumerate(orders) if n > peak and n >= N // 2]
    if len(tail) < 3:
        logger.warning(f"{space.name} [{a.name}]: N={N} 이 항 최대점 {peak} 에 비해 작아 전체 구간으로 적합합니다")
        tail = list(range(len(orders)))
    tail_errors = [errors[k] for k in tail]
    monotone = all(later < earlier for earlier, later in zip(tail_errors, tail_errors[1:]))

    # 위쪽 변: x ∈ [σ, ρ+1/2], 다항 인수 Y^M 제거 후 log|I| 기울기
    degree = space.datum.degree_m
    tops = np.array([abs(_horizontal(g, sigma, rho + 0.5, y)) for y in SIDE_HEIGHTS])
    side_slope = _slope(SIDE_HEIGHTS, np.log(tops) - degree * np.log(SIDE_HEIGHTS))
    error_rate, prefactor = _tail_rate([orders[k] for k in tail], tail_errors)
    expected_rate = space.datum.omega_max * radial.norm(space.datum) - cert.P

    result = ContourIterationResult(
        space=space.name, hardy=a.name, sigma=sigma, orders=orders,
        partial_sums=sums, closed_integrals=closed, residue_residuals=residuals,
        errors=errors, monotone=monotone,
        side_slope=side_slope, expected_side_slope=cert.A - np.pi,
        error_rate=error_rate, expected_error_rate=expected_rate,
        tail_start=orders[tail[0]], prefactor_degree=prefactor,
        reference=reference,
    )
    if result.side_slope_error > TOLERANCE_CONFIG["SLOPE"]:
        logger.warning(
            f"{space.name} [{a.name}]: 위쪽 변 기울기 {side_slope:.4f} 가 A-π={cert.A - np.pi:.4f} 에서 벗어남"
        )
    if result.rate_error > TOLERANCE_CONFIG["RATE"]:
        logger.warning(
            f"{space.name} [{a.name}]: 오차 기울기 {error_rate:.4f} 가 ΩH-P={expected_rate:.4f} 에서 벗어남"
        )
    logger.info(
        f"{space.name} [{a.name}]: 윤곽 반복 N≤{N}, 최대 유수 잔차 {max(residuals):.2e}, "
        f"N≥{result.tail_start} 단조 감소={monotone}, 오차 기울기 {error_rate:.3f} (예상 {expected_rate:.3f})"
    )
    return result
