#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Laplace 변환으로 만든 Hardy 클래스 함수

[P, R]^l 에 지지된 h 에 대해 (Lh)(λ) = ∫ h(x) e^{-Σ λ_j x_j} dx 는 정함수이고
Re λ_j ≥ -d 에서 |Lh(λ)| ≤ ‖h‖₁ e^{(R-P) d l} e^{-P Σ Re λ_j} 를 만족합니다.
"""

import logging
import itertools

import numpy as np

from numerics.quadrature import composite_nodes
from hardy.hardy import HardyFunction, HardyCertificate
from utils.errors import ConvergenceError, CertificateError

# 로거 설정
logger = logging.getLogger(__name__)


def _tensor_grid(P, R, rank, nodes, panel_width):
    x, w = composite_nodes(P, R, nodes, panel_width)
    if rank == 1:
        return x[:, None], w
    index = np.array(list(itertools.product(range(x.size), repeat=rank)), dtype=int)
    return x[index], np.prod(w[index], axis=1)


def laplace_hardy(h, P, R, rank=1, delta=1.0, rho_max=1.0, A=0.0, nodes=24, panel_width=0.25,
                  closed_form=None, name=None):
    """
    Laplace 변환 Hardy 함수 생성

    Args:
        h: 벡터화된 함수 (m, rank) -> (m,) 또는 같은 길이의 표본 배열
        P, R: 지지 구간 [P, R] (0 < P < R)
        rank: 변수 개수
        delta: 인증서의 δ
        rho_max: H(δ) 에서 허용되는 최대 ρ̃ (d = δ·rho_max)
        A: 인증서의 A (0 ≤ A < π 중 임의)
        closed_form: 있으면 구적 대신 사용하는 닫힌 형태 (m, rank) -> (m,)

    Returns:
        HardyFunction

    Raises:
        CertificateError: P, R 범위 오류
        ConvergenceError: 구적 결과가 유한하지 않음
    """
    if not 0 < P < R < np.inf:
        raise CertificateError(f"Laplace 지지 구간은 0 < P < R < ∞ 이어야 합니다: [{P}, {R}]")

    x, w = _tensor_grid(P, R, rank, nodes, panel_width)
    samples = np.asarray(h(x) if callable(h) else h, dtype=float)
    if samples.shape != w.shape:
        raise CertificateError(f"h 표본 수 {samples.shape} 가 구적 노드 수 {w.shape} 와 다릅니다")
    norm_l1 = float(np.sum(np.abs(samples) * w))

    def by_quadrature(coords):
        coords = np.asarray(coords, dtype=complex)
        flat = coords.reshape(-1, rank)
        values = np.exp(-flat @ x.T) @ (samples * w)
        if not np.all(np.isfinite(values)):
            raise ConvergenceError("Laplace 변환 구적 결과가 유한하지 않음")
        return values.reshape(coords.shape[:-1])

    d = delta * rho_max
    constant = max(norm_l1, 1e-300) * np.exp((R - P) * d * rank)
    certificate = HardyCertificate(A=A, P=P, delta=delta, C=constant).validate()
    logger.debug(f"Laplace Hardy 함수: [{P}, {R}]^{rank}, ‖h‖₁={norm_l1:.6g}, C={constant:.6g}")
    return HardyFunction(
        evaluator=closed_form or by_quadrature,
        certificate=certificate,
        rank=rank,
        name=name or f"laplace[{P:g},{R:g}]",
    )


def box_transform(P, R):
    """
    지시함수 1_[P,R] 의 Laplace 변환 (e^{-Pλ} - e^{-Rλ})/λ (좌표별 곱)

    λ = 0 근방에서는 테일러 전개를 사용합니다.
    """
    def evaluate(coords):
        lam = np.asarray(coords, dtype=complex)
        small = np.abs(lam) < 1e-6
        safe = np.where(small, 1.0, lam)
        with np.errstate(over='ignore', invalid='ignore'):
            generic = (np.exp(-P * safe) - np.exp(-R * safe)) / safe
        series = (R - P) - 0.5 * (R ** 2 - P ** 2) * lam + (R ** 3 - P ** 3) * lam ** 2 / 6.0
        return np.prod(np.where(small, series, generic), axis=-1)
    return evaluate
