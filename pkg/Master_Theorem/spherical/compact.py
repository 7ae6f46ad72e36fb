#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
콤팩트 쌍대의 구면 함수

ψ_μ = φ_{μ+ρ} 를 H = iX (X 실수) 방향으로 해석 접속합니다.
접속은 Ω̄_π = {|α(X)| ≤ π/2} 안에서만 허용합니다.
"""

import numpy as np

from roots.root_system import DominantWeight
from spherical.radial import RadialPoint
from utils.errors import ContinuationDomainError


def psi_compact(evaluator, mu, x):
    """
    ψ_μ(exp iX)

    Args:
        evaluator: SphericalEvaluator
        mu: DominantWeight 또는 정수 튜플
        x: X 의 ω 쌍대 좌표 (실수 배열) 또는 RadialPoint (허수부 사용)

    Raises:
        ContinuationDomainError: X 가 Ω̄_π 밖
    """
    mu = mu if isinstance(mu, DominantWeight) else DominantWeight(tuple(mu))
    radial = x if isinstance(x, RadialPoint) else RadialPoint.compact(x)
    datum = evaluator.datum
    if not radial.in_closed_omega_pi(datum):
        raise ContinuationDomainError(
            f"{datum.name}: iX={radial} 가 Ω̄_π 밖입니다 (max|α(X)| > π/2)"
        )
    if mu.height == 0:
        return 1.0 + 0.0j
    return evaluator.phi(mu.array + datum.rho_coords, radial)


def su2_character(k, theta):
    """정규화된 SU(2) 지표 sin((k+1)θ) / ((k+1) sin θ)"""
    theta = np.asarray(theta, dtype=float)
    with np.errstate(invalid='ignore', divide='ignore'):
        values = np.sin((k + 1) * theta) / ((k + 1) * np.sin(theta))
    return np.where(np.abs(theta) < 1e-12, 1.0, values)
