#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
2부: 윤곽 적분 표현

    f(exp H) = (1/|W|) ∫_{σ+i𝔞*} ã(λ) φ_λ(exp H) dλ/(c(λ)c(-λ))        (대칭화, 기본)
             = ∫_{σ+i𝔞*} a(λ) b(λ) φ_λ(exp H) dλ/(c(λ)c(-λ))             (비대칭화)

dλ = ∏ dλ_j 이고, b/(cc) 는 인수분해 경로로 계산합니다.
"""

import logging
from dataclasses import dataclass

import numpy as np

from bfunction.symmetrize import contour_integrand_factor, unsymmetrized_factor
from numerics.quadrature import QuadratureConfig, line_integral, choose_halfwidth
from roots.tubes import TubeKind, tube_mask
from master.series import as_radial
from master.space import as_space
from utils.errors import DomainViolationError

# 로거 설정
logger = logging.getLogger(__name__)

# 계수 2 이상에서 사용하는 패널 폭
_WIDE_PANEL = 1.0


@dataclass
class ContourResult:
    """contour_f 결과"""
    value: complex
    sigma: tuple
    halfwidth: float
    nodes_per_axis: int
    symmetrized: bool


def check_base_point(space, sigma, delta):
    """
    σ ∈ B(T_δ) 확인

    Raises:
        DomainViolationError: σ 가 기저 밖
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    if sigma.size != space.rank:
        raise DomainViolationError(f"{space.name}: σ 의 길이 {sigma.size} ≠ 계수 {space.rank}")
    if not tube_mask(space.datum, sigma.astype(complex)[None, :], TubeKind.T, delta)[0]:
        raise DomainViolationError(f"{space.name}: σ={sigma.tolist()} 가 B(T_δ) (δ={delta}) 밖입니다")
    return sigma


def contour_integrand(space, a, H, symmetrized=True):
    """(m, l) 배열 -> (m,) 피적분 함수"""
    space = as_space(space)
    evaluator = space.require_evaluator()
    radial = as_radial(H)
    factor = contour_integrand_factor if symmetrized else unsymmetrized_factor

    def integrand(points):
        points = np.asarray(points, dtype=complex)
        return factor(space.bfunction, a, points) * evaluator.phi(points, radial)

    return integrand


def contour_f(space, a, H, sigma=None, cfg=None, symmetrized=True):
    """
    윤곽 적분으로 f(exp H) 계산

    Args:
        space: 공간 이름, RootDatum 또는 SpaceContext
        a: HardyFunction
        H: RadialPoint 또는 h 배열
        sigma: 기저점 (기본값 0)
        cfg: QuadratureConfig (None 이면 Hardy 인증서로 절단 반폭 선택)
        symmetrized: False 이면 a·b 비대칭화 형태

    Returns:
        ContourResult

    Raises:
        DomainViolationError: σ ∉ B(T_δ)
        DecayCertificateError: 절단 경계 감쇠 검사 실패
    """
    space = as_space(space)
    a.require_certified()
    cert = a.certificate
    sigma = check_base_point(space, np.zeros(space.rank) if sigma is None else sigma, cert.delta)
    integrand = contour_integrand(space, a, H, symmetrized)

    if cfg is None:
        base = QuadratureConfig(panel_width=_WIDE_PANEL) if space.rank > 1 else QuadratureConfig()
        rate = np.pi - cert.A - space.datum.omega_max * space.datum.radial_norm(as_radial(H).array.imag)
        halfwidth = choose_halfwidth(integrand, sigma, rate, space.datum.degree_m, base)
        cfg = base.with_halfwidth(max(halfwidth, base.truncation_halfwidth))

    value = line_integral(integrand, sigma, cfg)
    logger.debug(f"{space.name} 윤곽: H={as_radial(H)}, σ={sigma.tolist()}, L={cfg.truncation_halfwidth}, 값 {value:.12g}")
    return ContourResult(
        value=complex(value),
        sigma=tuple(sigma.tolist()),
        halfwidth=cfg.truncation_halfwidth,
        nodes_per_axis=cfg.nodes_per_axis,
        symmetrized=symmetrized,
    )
