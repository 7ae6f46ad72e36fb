#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
감쇠 상한 적합 및 검증

C 를 한 격자에서 적합하고 서로 겹치지 않는 다른 격자에서 위반 여부를 셉니다.
    |Π(λ)b(λ)|   ≤ C (1+‖λ‖)^s e^{-π Σ|Im λ_j|}            on T_{Σ,m,η}
    |b/(cc)(λ)|  ≤ C (1+‖λ‖)^M e^{-π Σ|Im λ_j|}            on T_δ
    |ã(λ)|       ≤ C (1+‖λ‖)^s e^{(A-π) c₁ ‖Im λ‖}          on T_ε, ε < γ
"""

import logging
from dataclasses import dataclass

import numpy as np

from bfunction.symmetrize import a_tilde
from roots.tubes import TubeKind, tube_mask, sigma_m_limits

# 로거 설정
logger = logging.getLogger(__name__)

# 적합 상수 여유
FIT_MARGIN = 2.0


@dataclass
class DecayFit:
    """감쇠 상한 적합 결과"""
    name: str
    constant: float
    fit_points: int
    check_points: int
    max_ratio: float
    violations: int

    @property
    def passed(self):
        return self.violations == 0


def sample_tube(datum, n_points, seed, real_limits, imag_range=8.0, shrink=0.95):
    """
    |Re λ_β| < real_limits[β] 인 점을 거부 표본 추출

    Args:
        real_limits: β ∈ Σ*⁺ 별 상한 배열
    """
    rng = np.random.default_rng(seed)
    limits = np.asarray(real_limits, dtype=float) * shrink
    bound = float(np.max(limits))
    points = []
    while len(points) < n_points:
        real = rng.uniform(-bound, bound, size=(4 * n_points, datum.rank))
        inside = np.all(np.abs(real @ datum.star_coeffs.T) < limits, axis=1)
        imag = rng.uniform(-imag_range, imag_range, size=(int(np.sum(inside)), datum.rank))
        points.extend((real[inside] + 1j * imag).tolist())
    return np.asarray(points[:n_points], dtype=complex)


def _norm(datum, coords):
    """복소 λ 의 ‖λ‖ (실부, 허부 합성)"""
    return np.sqrt(datum.norm(coords.real) ** 2 + datum.norm(coords.imag) ** 2)


def fit_and_validate(name, value_fn, majorant_fn, fit_points, check_points):
    """
    적합 격자에서 C = 여유 × max(|값|/상한), 검증 격자에서 위반 수 계산

    Returns:
        DecayFit
    """
    fit_ratio = np.abs(value_fn(fit_points)) / majorant_fn(fit_points)
    constant = FIT_MARGIN * float(np.max(fit_ratio))
    check_ratio = np.abs(value_fn(check_points)) / (constant * majorant_fn(check_points))
    result = DecayFit(
        name=name,
        constant=constant,
        fit_points=len(fit_points),
        check_points=len(check_points),
        max_ratio=float(np.max(check_ratio)),
        violations=int(np.sum(check_ratio > 1.0)),
    )
    level = logging.WARNING if result.violations else logging.DEBUG
    logger.log(level, f"{name}: C={constant:.4g}, 검증 최대 비율 {result.max_ratio:.4f}, 위반 {result.violations}건")
    return result


def pi_b_bound_check(bfunction, n_points, seed, eta=0.05):
    """Π(λ)b(λ) 감쇠 상한 (T_{Σ,m,η})"""
    datum = bfunction.datum
    s = len(datum.star_roots)
    limits = sigma_m_limits(datum, eta)

    def value(coords):
        return bfunction.pi_poly(coords) * bfunction.b_eval(coords)

    def majorant(coords):
        return (1.0 + _norm(datum, coords)) ** s * np.exp(-np.pi * np.sum(np.abs(coords.imag), axis=-1))

    fit = sample_tube(datum, n_points, seed, limits)
    check = sample_tube(datum, n_points, seed + 1, limits)
    return fit_and_validate(f"{datum.name} Π·b", value, majorant, fit, check)


def b_over_cc_bound_check(bfunction, delta, n_points, seed):
    """b/(cc) 감쇠 상한 (T_δ)"""
    datum = bfunction.datum
    limits = delta * datum.rho_tilde

    def majorant(coords):
        return (1.0 + _norm(datum, coords)) ** datum.degree_m * np.exp(
            -np.pi * np.sum(np.abs(coords.imag), axis=-1)
        )

    fit = sample_tube(datum, n_points, seed, limits)
    check = sample_tube(datum, n_points, seed + 1, limits)
    return fit_and_validate(f"{datum.name} b/cc", bfunction.b_over_cc, majorant, fit, check)


def a_tilde_bound_check(bfunction, a, n_points, seed, epsilon=None):
    """ã 감쇠 상한 (T_ε, ε < γ)"""
    datum = bfunction.datum
    s = len(datum.star_roots)
    cert = a.certificate
    gamma = bfunction.gamma_threshold(cert.delta)
    epsilon = epsilon or 0.8 * gamma
    limits = epsilon * datum.rho_tilde

    def value(coords):
        return a_tilde(bfunction, a, coords, delta=cert.delta)

    def majorant(coords):
        imag_norm = datum.norm(coords.imag)
        return (1.0 + _norm(datum, coords)) ** s * np.exp((cert.A - np.pi) * datum.c1 * imag_norm)

    fit = sample_tube(datum, n_points, seed, limits)
    check = sample_tube(datum, n_points, seed + 1, limits)
    inside = tube_mask(datum, check, TubeKind.T, epsilon)
    return fit_and_validate(f"{datum.name} ã[{a.name}]", value, majorant, fit, check[inside])
