#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
2×2 행렬군의 Iwasawa 적분 오라클

    φ_λ(a_t) = ∫_K e^{(λ-ρ)(H(a_t k))} dk,   a_t = diag(e^t, e^{-t})

g = k a n 에서 ‖g e₁‖ = e^{α(log a)/2} 이므로 e^{(λ-ρ)(H(g))} = ‖g e₁‖^{2(λ-ρ)}.
  * split-rank-one (SL(2,ℝ)/SO(2), ρ = 1/2): K = SO(2), 원 위 사다리꼴 규칙
  * complex-rank-one (SL(2,ℂ)/SU(2), ρ = 1): Euler 각 b 에 대한 ½ sin b db
"""

import logging

import numpy as np

from numerics.quadrature import composite_nodes
from utils.errors import ConvergenceError, UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)

SPLIT_MODEL = "split-rank-one"
COMPLEX_MODEL = "complex-rank-one"
MODEL_RHO = {SPLIT_MODEL: 0.5, COMPLEX_MODEL: 1.0}

# 노드 배가 수렴 기준
ORACLE_TOL = 1e-12
MAX_NODES = 4096


def model_for(datum):
    """근계에 맞는 모델 이름 (없으면 UnsupportedSpaceError)"""
    if datum.rank == 1 and datum.is_reduced and int(datum.star_half_mult[0]) == 0:
        mult = int(datum.star_mult[0])
        if mult == 1:
            return SPLIT_MODEL
        if mult == 2:
            return COMPLEX_MODEL
    raise UnsupportedSpaceError(f"{datum.name}: Iwasawa 오라클은 SL(2,ℝ), SL(2,ℂ) 모델만 지원합니다")


def _split_integral(lam, t, nodes):
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    base = np.exp(2.0 * t) * np.cos(theta) ** 2 + np.exp(-2.0 * t) * np.sin(theta) ** 2
    return np.mean(np.power(base[None, :], (lam - 0.5)[:, None]), axis=1)


def _complex_integral(lam, t, panels):
    b, w = composite_nodes(0.0, np.pi, 16, np.pi / panels)
    base = np.exp(2.0 * t) * np.cos(b / 2.0) ** 2 + np.exp(-2.0 * t) * np.sin(b / 2.0) ** 2
    weights = 0.5 * w * np.sin(b)
    return np.power(base[None, :], (lam - 1.0)[:, None]) @ weights


def phi_oracle_rank1(lam, t, model):
    """
    K 적분으로 직접 계산한 φ_λ(a_t)

    Args:
        lam: λ₁ (스칼라 또는 1차원 배열)
        t: 실수 (정수 λ-ρ 이면 복소 t 도 가능)
        model: SPLIT_MODEL 또는 COMPLEX_MODEL

    Raises:
        ConvergenceError: 노드 배가에도 수렴하지 않음
    """
    if model not in MODEL_RHO:
        raise UnsupportedSpaceError(f"알 수 없는 오라클 모델: {model}")
    scalar = np.ndim(lam) == 0
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    t = complex(t)
    integral = _split_integral if model == SPLIT_MODEL else _complex_integral

    nodes = 64 if model == SPLIT_MODEL else 4
    previous = integral(lam, t, nodes)
    while True:
        nodes *= 2
        current = integral(lam, t, nodes)
        error = float(np.max(np.abs(current - previous) / np.maximum(1.0, np.abs(current))))
        if error < ORACLE_TOL:
            break
        if nodes >= MAX_NODES:
            raise ConvergenceError(f"{model} 오라클 비수렴 (t={t}, 상대 차이 {error:.2e})")
        previous = current
    logger.debug(f"{model} 오라클: t={t}, 노드 {nodes}, 차이 {error:.2e}")
    return complex(current[0]) if scalar else current
