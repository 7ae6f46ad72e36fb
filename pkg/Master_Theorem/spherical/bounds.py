#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
구면 함수 증가 상한 표본 검사

    |φ_λ(exp H)|      ≤ C e^{Ω ‖H‖ Σ_j Re λ_j}    (Re λ_j > 0, H 실수, C 적합)
    |φ_{μ+ρ}(exp H)|  ≤ e^{‖μ‖ ‖H‖}               (μ ∈ Λ⁺, H 실수)
"""

import logging

import numpy as np

from bfunction.decay import DecayFit, fit_and_validate
from spherical.evaluator import COMPLEX_CASE

# 로거 설정
logger = logging.getLogger(__name__)

# 위반 판정 여유
BOUND_SLACK = 1e-10


def _sample(evaluator, n_points, seed):
    """(λ, h) 쌍을 한 행에 붙인 (n, 2l) 배열"""
    datum = evaluator.datum
    rng = np.random.default_rng(seed)
    rank = datum.rank
    lam = rng.uniform(0.05, 3.0, (n_points, rank)) + 1j * rng.uniform(-8.0, 8.0, (n_points, rank))
    h = rng.uniform(-2.5, 2.5, (n_points, rank))
    if evaluator.mode != COMPLEX_CASE:
        h = np.abs(h)
    return np.concatenate([lam, h.astype(complex)], axis=1)


def opdam_bound_check(evaluator, n_points=200, seed=0):
    """
    |φ_λ(exp H)| ≤ C e^{Ω‖H‖Σ Re λ_j}, C 는 한 격자에서 적합하고 다른 격자에서 검증

    Returns:
        DecayFit
    """
    datum = evaluator.datum
    rank = datum.rank

    def value(rows):
        return np.array([evaluator.phi(row[:rank], row[rank:]) for row in rows])

    def majorant(rows):
        norms = np.array([datum.radial_norm(row[rank:].real) for row in rows])
        return np.exp(datum.omega_max * norms * np.sum(rows[:, :rank].real, axis=1))

    fit = _sample(evaluator, n_points, seed)
    check = _sample(evaluator, n_points, seed + 1)
    return fit_and_validate(f"{datum.name} Opdam 상한", value, majorant, fit, check)


def psi_bound_check(evaluator, max_height=4, n_points=50, seed=0):
    """
    |φ_{μ+ρ}(exp H)| ≤ e^{‖μ‖‖H‖} 를 높이 ≤ max_height 인 모든 μ 에 대해 확인

    Returns:
        DecayFit (constant = 1)
    """
    datum = evaluator.datum
    rng = np.random.default_rng(seed)
    samples = rng.uniform(-2.0, 2.0, (n_points, datum.rank))
    if evaluator.mode != COMPLEX_CASE:
        samples = np.abs(samples)

    ratios = []
    for mu in datum.dominant_weights(max_height):
        weight_norm = float(datum.norm(mu.array))
        for h in samples:
            value = abs(evaluator.phi(mu.array + datum.rho_coords, h))
            ratios.append(value / np.exp(weight_norm * datum.radial_norm(h)))
    ratios = np.asarray(ratios)
    result = DecayFit(
        name=f"{datum.name} ψ 상한",
        constant=1.0,
        fit_points=0,
        check_points=len(ratios),
        max_ratio=float(np.max(ratios)),
        violations=int(np.sum(ratios > 1.0 + BOUND_SLACK)),
    )
    level = logging.WARNING if result.violations else logging.DEBUG
    logger.log(level, f"{result.name}: 최대 비율 {result.max_ratio:.6f}, 위반 {result.violations}건")
    return result
