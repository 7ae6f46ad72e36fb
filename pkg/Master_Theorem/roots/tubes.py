#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
튜브 영역 판정

허수축 i𝔞* 주변의 튜브 영역 T_δ, T′_δ, T″_δ, T_{Σ,m}, T_{Σ,m,η} 와
Hardy 영역 H(δ) 의 소속 여부를 계산합니다. 경계는 모두 바깥으로 판정합니다.
"""

import logging
from enum import Enum

import numpy as np

from roots.root_system import SpectralPoint
from utils.errors import TubeParameterError

# 로거 설정
logger = logging.getLogger(__name__)


class TubeKind(Enum):
    T = "T"
    T_PRIME = "T'"
    T_DOUBLE_PRIME = "T''"
    SIGMA_M = "T_sigma_m"
    SIGMA_M_ETA = "T_sigma_m_eta"
    HARDY = "H"


def _check_delta(delta):
    if delta is None or not 0.0 < float(delta) <= 1.0:
        raise TubeParameterError(f"δ 는 (0, 1] 범위여야 합니다: {delta}")


def _check_eta(eta):
    if eta is None or not 0.0 <= float(eta) < 0.5:
        raise TubeParameterError(f"η 는 [0, 1/2) 범위여야 합니다: {eta}")


def sigma_m_limits(datum, eta=0.0):
    """
    T_{Σ,m,η} 의 β 별 상한

    m_(β/2)/2 가 짝수이면 1-η, 홀수이면 1/2-η
    """
    odd = (datum.star_half_mult // 2) % 2 == 1
    return np.where(odd, 0.5 - eta, 1.0 - eta)


def tube_mask(datum, coords, kind, param=None):
    """
    벡터화된 튜브 소속 판정

    Args:
        datum: RootDatum
        coords: (..., l) 복소 배열 (ω 좌표)
        kind: TubeKind
        param: δ (T, T′, T″, H) 또는 η (T_{Σ,m,η})

    Returns:
        (...) bool 배열

    Raises:
        TubeParameterError: δ ∉ (0,1] 또는 η ∉ [0,1/2)
    """
    kind = TubeKind(kind)
    real = np.real(np.asarray(coords, dtype=complex))

    if kind is TubeKind.T:
        _check_delta(param)
        return np.all(np.abs(real @ datum.star_coeffs.T) < param * datum.rho_tilde, axis=-1)
    if kind is TubeKind.T_PRIME:
        _check_delta(param)
        return np.all(np.abs(real) < param * datum.rho_coords, axis=-1)
    if kind is TubeKind.T_DOUBLE_PRIME:
        _check_delta(param)
        return np.all(real < param * datum.rho_coords, axis=-1)
    if kind is TubeKind.HARDY:
        _check_delta(param)
        return np.all(real @ datum.star_coeffs.T > -param * datum.rho_tilde, axis=-1)

    eta = 0.0
    if kind is TubeKind.SIGMA_M_ETA:
        _check_eta(param)
        eta = float(param)
    return np.all(np.abs(real @ datum.star_coeffs.T) < sigma_m_limits(datum, eta), axis=-1)


def tube_membership(datum, point, kind, param=None):
    """
    단일 λ 의 튜브 소속 여부

    Returns:
        bool
    """
    coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
    return bool(tube_mask(datum, coords, kind, param))


def weyl_tube_intersections(datum, coords, delta):
    """
    ∩_w w(T″_δ), ∩_w w(T′_δ) 소속 판정

    λ ∈ w(T) ⇔ w⁻¹λ ∈ T 이고 W 전체를 돌기 때문에 궤도 전체의 소속으로 판정합니다.

    Returns:
        dict: 'T', 'double_prime', 'prime', 'w0' -> bool 배열
    """
    coords = np.asarray(coords, dtype=complex)
    orbit = datum.orbit_coords(coords)
    direct = tube_mask(datum, coords, TubeKind.T, delta)
    double_prime = np.all(tube_mask(datum, orbit, TubeKind.T_DOUBLE_PRIME, delta), axis=0)
    prime = np.all(tube_mask(datum, orbit, TubeKind.T_PRIME, delta), axis=0)
    # T′ = T″ ∩ w₀(T″)
    w0 = tube_mask(datum, coords, TubeKind.T_DOUBLE_PRIME, delta) & tube_mask(
        datum, datum.act(coords, datum.w0_index), TubeKind.T_DOUBLE_PRIME, delta
    )
    return {"T": direct, "double_prime": double_prime, "prime": prime, "w0": w0}


def sample_base_point(datum, delta, rng, shrink=0.9):
    """B(T_δ) 안의 임의 실수 기저점 (거부 표본 추출)"""
    _check_delta(delta)
    bound = float(np.max(delta * datum.rho_coords))
    for _ in range(10000):
        candidate = rng.uniform(-bound, bound, size=datum.rank) * shrink
        if tube_mask(datum, candidate, TubeKind.T, delta):
            return candidate
    raise TubeParameterError(f"B(T_δ) 표본 추출 실패: δ={delta}")
