#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
고전 Ramanujan Master Theorem (1변수)

    f(x) = Σ_k (-1)^k a(k) x^k                               0 < x < e^P
         = (1/2πi) ∫_{σ+iℝ} (-π/sin πλ) a(λ) x^λ dλ           모든 x > 0, σ ∈ (-δ, 0)
    ∫_0^∞ x^{-λ-1} f(x) dx = -π a(λ)/sin(πλ)                 0 < Re λ < δ (해석 접속)

적분은 x₀ 에서 나누어 [0, x₀] 부분은 급수를 항별 적분하고
(Σ (-1)^k a(k) x₀^{k-λ}/(k-λ) 는 0 < Re λ < 1 로의 해석 접속을 그대로 줍니다),
[x₀, ∞) 부분은 u = log x 로 바꾸어 윤곽 표현의 f 를 구적한 뒤 지수 꼬리 적합을 더합니다.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config.settings import SERIES_CONFIG, QUAD_CONFIG
from numerics.quadrature import (
    QuadratureConfig, composite_nodes, check_boundary_decay, choose_halfwidth, exponential_tail
)
from numerics.special import sinpi, cgamma
from utils.errors import (
    RadiusError, TruncationCertificateError, DomainViolationError, TailFitError
)

# 로거 설정
logger = logging.getLogger(__name__)

# 꼬리 적합 창 폭과 허용 잔차
TAIL_WINDOW = 3.0
TAIL_FIT_RESIDUAL = 0.05
# 이 크기 미만의 피적분 함수는 꼬리가 없는 것으로 취급
NEGLIGIBLE = 1e-15


def _series_terms(a, tolerance, ratio, max_terms):
    """C q^N/(1-q) < tolerance 를 만족하는 최소 N"""
    constant = a.certificate.C
    for n in range(1, max_terms + 1):
        if constant * ratio ** n / (1.0 - ratio) < tolerance:
            return n
    raise TruncationCertificateError(
        f"{a.name}: {max_terms} 항 안에서 꼬리 상한 {tolerance:.1e} 를 만족할 수 없음 (q={ratio:.4f})"
    )


def classical_series(a, x, tolerance=None, max_terms=None):
    """
    Σ_k (-1)^k a(k) x^k

    Raises:
        RadiusError: x ∉ (0, e^P)
        TruncationCertificateError: 최대 항 수 안에서 꼬리 상한 불만족
    """
    tolerance = tolerance or SERIES_CONFIG["TOLERANCE"]
    max_terms = max_terms or 10 * SERIES_CONFIG["MAX_HEIGHT"]
    P = a.certificate.P
    if not 0.0 < x < np.exp(P):
        raise RadiusError(f"{a.name}: x={x} 는 수렴 반경 (0, e^P={np.exp(P):.6g}) 밖입니다")
    n = _series_terms(a, tolerance, x * np.exp(-P), max_terms)
    k = np.arange(n, dtype=float)
    terms = (-1.0) ** k * a(k) * x ** k
    return complex(np.sum(terms))


@dataclass
class ClassicalKernel:
    """수직선 σ + iy 위의 (-π/sin πλ) a(λ) 노드 값과 가중치"""
    sigma: float
    nodes: np.ndarray
    weights: np.ndarray
    halfwidth: float

    def evaluate(self, x):
        """x 배열에서의 f(x)"""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        powers = np.exp(np.log(x)[:, None] * self.nodes[None, :])
        # dλ = i dy, 1/(2πi)
        return powers @ self.weights / (2.0 * np.pi)


def classical_kernel(a, sigma, cfg=None, panel_width=None):
    """
    σ 위의 구적 노드 준비

    Raises:
        DomainViolationError: σ ∉ (-δ, 0)
        DecayCertificateError: 절단 경계 감쇠 검사 실패
    """
    delta = a.certificate.delta
    if not -delta < sigma < 0.0:
        raise DomainViolationError(f"σ={sigma} 는 (-δ, 0) = ({-delta}, 0) 밖입니다")
    cfg = cfg or QuadratureConfig()

    def integrand(points):
        lam = np.asarray(points, dtype=complex)[..., 0]
        return -np.pi / sinpi(lam) * a(lam)

    halfwidth = choose_halfwidth(integrand, [sigma], np.pi - a.certificate.A, 0, cfg)
    halfwidth = max(halfwidth, cfg.truncation_halfwidth)
    cfg = cfg.with_halfwidth(halfwidth)
    check_boundary_decay(integrand, [sigma], cfg)

    y, w = composite_nodes(-halfwidth, halfwidth, cfg.nodes_per_axis, panel_width or cfg.panel_width)
    nodes = sigma + 1j * y
    return ClassicalKernel(sigma=sigma, nodes=nodes, weights=w * integrand(nodes[:, None]),
                           halfwidth=halfwidth)


def classical_contour(a, x, sigma=-0.5, cfg=None):
    """
    (1/2πi) ∫_{σ+iℝ} (-π/sin πλ) a(λ) x^λ dλ

    Raises:
        DomainViolationError: σ ∉ (-δ, 0) 또는 x ≤ 0
        DecayCertificateError: 감쇠 인증서 실패
    """
    if not x > 0:
        raise DomainViolationError(f"x 는 양수여야 합니다: {x}")
    kernel = classical_kernel(a, sigma, cfg)
    return complex(kernel.evaluate([x])[0])


@dataclass
class ClassicalInterpolation:
    """classical_interpolate 결과"""
    lam: complex
    lhs: complex
    rhs: complex
    rhs_gamma: complex
    split: float
    upper: float
    tail: complex


def classical_interpolate(a, lam, sigma=None, tolerance=1e-11, cfg=None):
    """
    ∫_0^∞ x^{-λ-1} f(x) dx (해석 접속) 와 -π a(λ)/sin(πλ), Γ(-λ)A(λ)

    Args:
        a: 1변수 HardyFunction
        lam: 0 < Re λ < δ
        sigma: f 를 계산할 윤곽 (기본값 -δ/2)

    Returns:
        ClassicalInterpolation

    Raises:
        DomainViolationError: Re λ ∉ (0, δ)
        TailFitError: 꼬리 적합 실패
    """
    lam = complex(lam)
    cert = a.certificate
    if not 0.0 < lam.real < cert.delta:
        raise DomainViolationError(f"Re λ={lam.real} 는 (0, δ={cert.delta}) 밖입니다")
    sigma = -0.5 * cert.delta if sigma is None else sigma

    # [0, x₀]: 항별 적분
    x0 = min(1.0, 0.5 * np.exp(cert.P))
    q = x0 * np.exp(-cert.P)
    n = _series_terms(a, tolerance * (1.0 - lam.real), q, 10 * SERIES_CONFIG["MAX_HEIGHT"])
    k = np.arange(n, dtype=float)
    head = complex(np.sum((-1.0) ** k * a(k) * x0 ** (k - lam) / (k - lam)))

    # [x₀, ∞): u = log x
    kernel = classical_kernel(a, sigma, cfg)
    lower = np.log(x0)
    tail, residual = 0.0j, 0.0
    upper = 16.0
    while True:
        width = min(QUAD_CONFIG["PANEL_WIDTH"], 16.0 / upper)
        u, w = composite_nodes(lower, upper, QUAD_CONFIG["NODES_PER_AXIS"], width)
        values = np.exp(-lam * u) * kernel.evaluate(np.exp(u))
        body = complex(np.sum(w * values))
        window = u >= upper - TAIL_WINDOW
        tail, residual = exponential_tail(u[window], values[window], NEGLIGIBLE, TAIL_FIT_RESIDUAL)
        if abs(tail) < tolerance or upper >= 128.0:
            break
        upper *= 2.0
    if abs(tail) > 1e3 * tolerance:
        raise TailFitError(f"U={upper} 에서도 꼬리 {abs(tail):.2e} 가 큼")

    lhs = head + body + tail
    rhs = complex(-np.pi * a(lam) / sinpi(lam))
    rhs_gamma = complex(cgamma(-lam) * a(lam) * cgamma(lam + 1.0))
    logger.debug(f"{a.name} λ={lam}: lhs={lhs:.12g}, rhs={rhs:.12g}, U={upper}, 꼬리={abs(tail):.1e}")
    return ClassicalInterpolation(lam=lam, lhs=lhs, rhs=rhs, rhs_gamma=rhs_gamma,
                                  split=x0, upper=upper, tail=tail)
