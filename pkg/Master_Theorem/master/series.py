#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
1부: 구면 Fourier 급수

    f(exp H) = Σ_{μ∈Λ⁺} (-1)^{|μ|} d(μ) a(μ+ρ) φ_{μ+ρ}(exp H)

절단 높이 N 은 |a(μ+ρ)| ≤ C e^{-P|ρ|} e^{-P|μ|}, |φ_{μ+ρ}(exp H)| ≤ e^{Ω‖Re H‖ |μ|},
d(μ) ≤ D (1+|μ|)^M 로부터 꼬리 상한이 tol/2 미만이 되는 최소 높이입니다.
"""

import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from config.settings import SERIES_CONFIG
from spherical.radial import RadialPoint
from master.space import as_space
from utils.errors import RadiusError, TruncationCertificateError, ContinuationDomainError

# 로거 설정
logger = logging.getLogger(__name__)

# 꼬리 합을 계산할 때 더 볼 높이 수
_TAIL_SPAN = 4000


@dataclass(frozen=True)
class SeriesConfig:
    """급수 절단 설정"""
    tolerance: float = SERIES_CONFIG["TOLERANCE"]
    max_height: int = SERIES_CONFIG["MAX_HEIGHT"]


@dataclass
class SeriesResult:
    """series_f 결과"""
    value: complex
    height: int
    tail_bound: float
    terms: int
    radius: float


def as_radial(H):
    if isinstance(H, RadialPoint):
        return H
    return RadialPoint(tuple(np.atleast_1d(np.asarray(H, dtype=complex))))


def dimension_majorant(space, height):
    """
    d(μ) ≤ D (1+|μ|)^M 의 (D, M), 높이 ≤ height 인 μ 로 적합 (여유 2배)
    """
    mus, dims, heights = space.weight_table(height)
    degree = int(sum(f.degree for f in space.factors.factors))
    constant = 2.0 * float(np.max(dims / (1.0 + heights) ** degree))
    return constant, degree


def truncation_height(space, a, r, cfg):
    """
    꼬리 상한 < tol/2 인 최소 높이와 그 상한

    Raises:
        RadiusError: Ω r ≥ P
        TruncationCertificateError: max_height 안에서 불만족
    """
    datum = space.datum
    cert = a.certificate
    rate = cert.P - datum.omega_max * r
    if rate <= 0:
        raise RadiusError(
            f"{space.name}: ‖H‖={r:.6g} 가 수렴 반경 P/Ω={space.radius(a):.6g} 이상입니다"
        )
    rank = datum.rank
    c_prime = cert.C * np.exp(-cert.P * float(np.sum(datum.rho_coords)))

    # 절단 높이 후보의 2배까지 d 적합
    guess = min(cfg.max_height, max(8, int(np.ceil(40.0 / rate))))
    D, M = dimension_majorant(space, min(2 * guess, 2 * cfg.max_height))

    n = np.arange(0, cfg.max_height + _TAIL_SPAN + 1, dtype=float)
    counts = np.array([comb(int(k) + rank - 1, rank - 1) for k in n], dtype=float)
    with np.errstate(under='ignore'):
        terms = c_prime * counts * D * (1.0 + n) ** M * np.exp(-rate * n)
    tails = np.cumsum(terms[::-1])[::-1]
    for height in range(cfg.max_height + 1):
        if tails[height + 1] < 0.5 * cfg.tolerance:
            return height, float(tails[height + 1])
    raise TruncationCertificateError(
        f"{space.name}: 높이 {cfg.max_height} 에서 꼬리 상한 {tails[cfg.max_height + 1]:.2e} ≥ {0.5 * cfg.tolerance:.1e}"
    )


def series_f(space, a, H, cfg=None):
    """
    절단한 구면 Fourier 급수

    Args:
        space: 공간 이름, RootDatum 또는 SpaceContext
        a: HardyFunction
        H: RadialPoint 또는 h 배열 (허수부가 있으면 콤팩트 쪽 접속)
        cfg: SeriesConfig

    Returns:
        SeriesResult

    Raises:
        RadiusError, TruncationCertificateError, ContinuationDomainError
    """
    space = as_space(space)
    cfg = cfg or SeriesConfig()
    evaluator = space.require_evaluator()
    a.require_certified()
    radial = as_radial(H)
    datum = space.datum

    if not radial.in_closed_omega_pi(datum):
        raise ContinuationDomainError(f"{space.name}: Im H={radial} 가 Ω̄_π 밖입니다")
    r = radial.norm(datum)
    height, tail = truncation_height(space, a, r, cfg)

    mus, dims, heights = space.weight_table(height)
    lam = mus + datum.rho_coords
    coefficients = (-1.0) ** heights * dims * a(lam)
    values = evaluator.phi(lam, radial)
    total = complex(np.sum(coefficients * values))
    logger.debug(f"{space.name} 급수: H={radial}, 높이 {height}, 항 {len(mus)}, 꼬리 ≤ {tail:.1e}")
    return SeriesResult(value=total, height=height, tail_bound=tail, terms=len(mus), radius=space.radius(a))


def series_coefficients(space, a, height):
    """(-1)^{|μ|} d(μ) a(μ+ρ) 와 μ 배열"""
    space = as_space(space)
    mus, dims, heights = space.weight_table(height)
    return mus, (-1.0) ** heights * dims * a(mus + space.datum.rho_coords)
