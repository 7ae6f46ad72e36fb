#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
대칭화 ã(λ) = Σ_w a(wλ) b(wλ)

λ_β = 0 초평면(W 특이점)에서 각 항은 단순극을 갖지만 합은 정칙입니다.
그 근방에서는 일반 방향으로 ±h, ±h/2 이동한 대칭 평균에 Richardson 외삽을 적용합니다.
"""

import logging

import numpy as np

from config.settings import NUMERIC_CONFIG
from numerics.special import richardson
from roots.root_system import SpectralPoint
from roots.tubes import TubeKind, tube_mask
from utils.errors import DomainViolationError, UnresolvedSingularityError

# 로거 설정
logger = logging.getLogger(__name__)

# 이 거리 안의 λ_β 는 W 특이점 근방으로 취급
SINGULAR_RADIUS = 1e-3


def _generic_direction(rank):
    real = np.array([0.7548776662, 0.5698402910, 0.4301597090, 0.3247179572])[:rank]
    return real + 1j * np.array([0.1213, 0.0719, 0.0437, 0.0281])[:rank]


def a_tilde_raw(bfunction, a, coords):
    """특이점 처리 없이 Σ_w a(wλ) b(wλ)"""
    orbit = bfunction.datum.orbit_coords(coords)
    return np.sum(a(orbit) * bfunction.b_eval(orbit), axis=0)


def a_tilde(bfunction, a, point, delta=None, check_domain=True):
    """
    ã(λ) = Σ_{w∈W} a(wλ) b(wλ)

    Args:
        bfunction: BFunction
        a: HardyFunction
        point: SpectralPoint 또는 (..., l) 배열
        delta: 튜브 T_δ 의 δ (기본값: a 의 인증서 δ)
        check_domain: λ ∈ T_{Σ,m} ∩ T_δ 검사 여부

    Raises:
        DomainViolationError: λ 가 T_{Σ,m} ∩ T_δ 밖
        UnresolvedSingularityError: 외삽 잔차가 허용치 초과
    """
    datum = bfunction.datum
    coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
    scalar = coords.ndim == 1
    coords = np.atleast_2d(coords)
    delta = delta if delta is not None else a.certificate.delta

    if check_domain:
        inside = tube_mask(datum, coords, TubeKind.T, delta) & tube_mask(datum, coords, TubeKind.SIGMA_M)
        if not np.all(inside):
            bad = coords[~inside][0]
            raise DomainViolationError(f"{datum.name}: λ={bad.tolist()} 가 T_Σ,m ∩ T_δ (δ={delta}) 밖")

    singular = np.any(np.abs(datum.lambda_star(coords)) < SINGULAR_RADIUS, axis=-1)
    out = np.empty(coords.shape[0], dtype=complex)
    if np.any(~singular):
        out[~singular] = a_tilde_raw(bfunction, a, coords[~singular])
    if np.any(singular):
        base = coords[singular]
        direction = _generic_direction(datum.rank)
        h = NUMERIC_CONFIG["SINGULAR_OFFSET"]

        def symmetric(step):
            return 0.5 * (
                a_tilde_raw(bfunction, a, base + step * direction)
                + a_tilde_raw(bfunction, a, base - step * direction)
            )

        coarse, fine = symmetric(h), symmetric(h / 2.0)
        value, residual = richardson(coarse, fine, order=2)
        scale = np.maximum(1.0, np.abs(value))
        if np.any(residual > NUMERIC_CONFIG["EXTRAPOLATION_TOL"] * scale):
            raise UnresolvedSingularityError(
                f"{datum.name}: ã 외삽 잔차 {float(np.max(residual / scale)):.2e} 초과"
            )
        out[singular] = value
    return complex(out[0]) if scalar else out


def contour_integrand_factor(bfunction, a, coords):
    """
    (1/|W|) Σ_w a(wλ) b(wλ)/(c(λ)c(-λ)) = (1/|W|) Σ_w a(wλ) (b/cc)(wλ)

    c(λ)c(-λ) 가 W 불변이므로 각 항은 b_over_cc(wλ) 로 계산합니다.
    """
    datum = bfunction.datum
    orbit = datum.orbit_coords(coords)
    total = np.zeros(orbit.shape[1:-1], dtype=complex)
    for image in orbit:
        total = total + a(image) * bfunction.b_over_cc(image)
    return total / datum.weyl_order


def unsymmetrized_factor(bfunction, a, coords):
    """대칭화하지 않은 a(λ) b(λ)/(c(λ)c(-λ))"""
    return a(coords) * bfunction.b_over_cc(coords)
