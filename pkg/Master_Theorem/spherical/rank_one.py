#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
계수 1 구면 함수 (Jacobi 함수)

    φ_λ(a_t) = ₂F₁(ρ + λ, ρ - λ; (m_{β/2} + m_β + 1)/2; -sinh² t),   t = β(H)/2

λ 는 ω₁ 좌표, ρ = ρ₁ = (m_β + m_{β/2}/2)/2 입니다.
"""

import logging

import numpy as np

from numerics.special import hyp2f1
from roots.root_system import SpectralPoint
from utils.errors import UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)


class RankOnePhi:
    """₂F₁ 기반 계수 1 φ_λ"""

    def __init__(self, datum):
        if datum.rank != 1:
            raise UnsupportedSpaceError(f"{datum.name}: 계수 1 공간이 아닙니다 (rank={datum.rank})")
        self.datum = datum
        self.half_mult = int(datum.star_half_mult[0])
        self.mult = int(datum.star_mult[0])
        self.rho = float(datum.rho_coords[0])
        self.c = (self.half_mult + self.mult + 1) / 2.0

    def __call__(self, coords, t):
        """
        Args:
            coords: (..., 1) 복소 배열
            t: β(H)/2 (복소 허용, 콤팩트 방향은 순허수)

        Returns:
            (...) 복소 배열
        """
        lam = np.asarray(coords, dtype=complex)[..., 0]
        t = complex(t)
        if abs(t) < 1e-15:
            return np.ones(lam.shape, dtype=complex)
        z = -np.sinh(t) ** 2
        return np.asarray(hyp2f1(self.rho + lam, self.rho - lam, self.c, z), dtype=complex).reshape(lam.shape)


def phi_rank1(datum, point, t):
    """계수 1 φ_λ(a_t), point 는 SpectralPoint, 스칼라 λ₁ 또는 (..., 1) 배열"""
    coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
    scalar = coords.ndim <= 1
    values = RankOnePhi(datum)(coords.reshape(-1, 1) if scalar else coords, t)
    return complex(values[0]) if scalar else values
