#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
b 함수의 유수 조건

(-2πi)^l Res_{λ₁=μ₁+ρ₁} ⋯ Res_{λ_l=μ_l+ρ_l} b(λ)/(c(λ)c(-λ)) = (-1)^{|μ|} d(μ)
"""

import logging
from dataclasses import dataclass

import numpy as np

from config.settings import QUAD_CONFIG
from numerics.quadrature import nested_residue
from plancherel.dimension import DimensionPolynomial
from roots.root_system import DominantWeight

# 로거 설정
logger = logging.getLogger(__name__)


@dataclass
class ResidueResult:
    """유수 검사 결과"""
    mu: tuple
    residue: complex
    target: complex
    ratio: complex
    dimension: int


def residue_check(bfunction, mu, radius=None, nodes=None):
    """
    μ 에서의 반복 유수와 목표값 (-1)^{|μ|} d(μ) (-2πi)^{-l} 의 비

    Args:
        bfunction: BFunction
        mu: DominantWeight 또는 정수 튜플

    Returns:
        ResidueResult (ratio 는 1 이어야 함)

    Raises:
        ResidueRadiusError: 두 반지름 결과 불일치 (다른 극점이 원 안에 있음)
    """
    mu = mu if isinstance(mu, DominantWeight) else DominantWeight(tuple(mu))
    datum = bfunction.datum
    centers = mu.array + datum.rho_coords
    residue = nested_residue(
        bfunction.b_over_cc, centers,
        radius=radius or QUAD_CONFIG["RESIDUE_RADIUS"],
        nodes=nodes or QUAD_CONFIG["RESIDUE_NODES"],
    )
    dimension = DimensionPolynomial(bfunction.factors).weyl_dim(mu)
    target = (-1) ** mu.height * dimension * (-2j * np.pi) ** (-datum.rank)
    ratio = residue / target
    logger.debug(f"{datum.name} μ={mu}: 유수 {residue:.12g}, 비율 {ratio:.12g}")
    return ResidueResult(mu=mu.coords, residue=residue, target=target, ratio=ratio, dimension=dimension)
