#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Weyl 차원 다항식

d(μ) = P(μ+ρ)/P(ρ), P(λ) = ∏_β p_β(λ_β)
"""

import logging

import numpy as np

from numerics.special import richardson
from roots.root_system import DominantWeight, SpectralPoint
from utils.errors import DimensionIntegralityError

# 로거 설정
logger = logging.getLogger(__name__)

# 정수성 허용치
INTEGRALITY_TOL = 1e-8


class DimensionPolynomial:
    """
    DensityFactors 로부터 만든 d(λ)

    Attributes:
        factors: DensityFactors
    """

    def __init__(self, factors):
        self.factors = factors
        self.datum = factors.datum

    def d_poly(self, point):
        """d(λ) = P(λ+ρ)/P(ρ) (임의의 복소 λ)"""
        coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
        value = np.asarray(self.factors.polynomial(coords + self.datum.rho_coords)) / self.factors.p_rho
        return complex(value) if value.ndim == 0 else value

    def weyl_dim_with_residual(self, mu):
        """
        d(μ) 와 정수 반올림 잔차

        Returns:
            tuple: (정수 d(μ), 상대 잔차)

        Raises:
            DimensionIntegralityError: 잔차가 허용치를 넘음
        """
        mu = mu if isinstance(mu, DominantWeight) else DominantWeight(tuple(mu))
        value = self.d_poly(mu.array)
        nearest = int(round(value.real))
        residual = abs(value - nearest) / max(1.0, abs(nearest))
        if residual > INTEGRALITY_TOL:
            raise DimensionIntegralityError(
                f"{self.datum.name}: d({mu}) = {value} 가 정수가 아님 (잔차 {residual:.2e})"
            )
        return nearest, residual

    def weyl_dim(self, mu):
        """정수 d(μ)"""
        return self.weyl_dim_with_residual(mu)[0]

    def lemma_limit(self, cfunction, mu, direction=None, step=1e-4):
        """
        c(λ-μ)c(-λ+μ)/(c(λ)c(-λ)) 의 λ → μ+ρ 극한 (감마 경로)

        일반 방향으로 step, step/2 만큼 떨어진 두 점의 값에 1차 Richardson 외삽을 적용합니다.

        Returns:
            tuple: (극한값, 잔차)
        """
        mu = mu if isinstance(mu, DominantWeight) else DominantWeight(tuple(mu))
        if direction is None:
            direction = np.array([0.61803398875, 0.41421356237, 0.7320508076][:self.datum.rank])
            direction = direction + 0.1j * np.arange(1, self.datum.rank + 1)
        target = mu.array + self.datum.rho_coords

        def ratio(h):
            lam = target + h * np.asarray(direction, dtype=complex)
            shifted = lam - mu.array
            numerator = cfunction(shifted) * cfunction(-shifted)
            return numerator / (cfunction(lam) * cfunction(-lam))

        value, residual = richardson(ratio(step), ratio(step / 2.0), order=1)
        return complex(value), float(residual)
