#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
복소 경우(축약 근계, 모든 m_β = 2)의 구면 함수

    φ_λ(exp H) = (π(ρ)/π(λ)) Σ_w det(w) e^{wλ(H)} / Δ(H)
    Δ(H) = Σ_w det(w) e^{wρ(H)} = ∏_{α>0} 2 sinh α(H)

Σ_w det(w) e^{wλ(H)} / π(λ) 는 λ 의 정함수이고, H 쪽 몫도 |α(H)| < π 에서 정칙입니다.
λ 나 H 가 Weyl 벽 근방이면 일반 복소 방향의 작은 원 위 평균(평균값 정리)으로
값을 구합니다. 사다리꼴 규칙은 원 위에서 지수적으로 수렴합니다.
"""

import logging

import numpy as np

from roots.root_system import SpectralPoint
from spherical.radial import RadialPoint
from utils.errors import UnsupportedSpaceError, ExtrapolationError

# 로거 설정
logger = logging.getLogger(__name__)

# 특이점 판정 반경
SINGULAR_RADIUS = 1e-3
# 원 평균 반지름 후보와 절점 수
CIRCLE_RADII = (0.25, 0.125, 0.5, 0.0625)
CIRCLE_NODES = 32


def _direction(rank, phase=0.0):
    base = np.array([0.7548776662, 0.5698402910, 0.4301597090, 0.3247179572])[:rank]
    direction = base + 1j * phase * np.arange(1, rank + 1)
    return direction / np.linalg.norm(direction)


def _circle_radius(wall_values, wall_slopes, cap=np.inf):
    """
    가장 가까운 다른 벽과의 여유가 최대인 반지름

    벽은 직선 base + z·d 위에서 z = -wall/slope 에 있습니다.

    Args:
        wall_values: (n, k) 벽 함수 값
        wall_slopes: (k,) 방향 d 에 대한 기울기
        cap: 허용 최대 반지름
    """
    hits = np.abs(np.asarray(wall_values) / np.asarray(wall_slopes))
    best, best_margin = None, -1.0
    for radius in CIRCLE_RADII:
        if radius > cap:
            continue
        margin = float(np.min(np.abs(hits - radius))) / radius
        if margin > best_margin:
            best, best_margin = radius, margin
    return best


def _circle_nodes(radius):
    return radius * np.exp(2j * np.pi * np.arange(CIRCLE_NODES) / CIRCLE_NODES)


class ComplexCasePhi:
    """복소 경우 닫힌 형태 φ_λ"""

    def __init__(self, datum):
        if not datum.is_complex_case:
            raise UnsupportedSpaceError(f"{datum.name}: 복소 경우가 아닙니다 (축약 근계, m ≡ 2 필요)")
        self.datum = datum
        self.rho_star = datum.lambda_star(datum.rho_coords).real
        self.pi_rho = float(np.prod(self.rho_star))

    def _weyl_denominator(self, h):
        return np.prod(2.0 * np.sinh(self.datum.root_values(h)))

    def _direct(self, coords, h):
        """정칙 λ, 정칙 H 에서의 직접 평가"""
        orbit = self.datum.orbit_coords(coords)
        exponent = np.einsum('w...j,j->w...', orbit, h)
        numerator = np.einsum('w,w...->...', self.datum.weyl_det.astype(complex), np.exp(exponent))
        pi_lambda = np.prod(self.datum.lambda_star(coords), axis=-1)
        return self.pi_rho / pi_lambda * numerator / self._weyl_denominator(h)

    def _regular_h(self, coords, h):
        """H 는 정칙, λ 특이 원소는 λ 방향 원 평균"""
        singular = np.any(np.abs(self.datum.lambda_star(coords)) < SINGULAR_RADIUS, axis=-1)
        out = np.empty(coords.shape[:-1], dtype=complex)
        if np.any(~singular):
            out[~singular] = self._direct(coords[~singular], h)
        if np.any(singular):
            base = coords[singular]
            direction = _direction(self.datum.rank, 0.05)
            radius = _circle_radius(self.datum.lambda_star(base), self.datum.lambda_star(direction))
            points = base[:, None, :] + _circle_nodes(radius)[None, :, None] * direction
            out[singular] = np.mean(self._direct(points, h), axis=-1)
        return out

    def __call__(self, coords, h):
        """
        φ_λ(exp H), λ 에 대해 벡터화

        Args:
            coords: (..., l) 복소 배열
            h: (l,) 복소 배열 (ω_j(H))

        Raises:
            ExtrapolationError: 원 평균이 유한하지 않음
        """
        coords = np.atleast_2d(np.asarray(coords, dtype=complex))
        h = np.asarray(h, dtype=complex)
        if np.all(np.abs(h) < 1e-14):
            return np.ones(coords.shape[:-1], dtype=complex)
        walls = self.datum.root_values(h)
        if np.min(np.abs(walls)) >= SINGULAR_RADIUS:
            values = self._regular_h(coords, h)
        else:
            # |α(H)| < π 안에서만 정칙
            direction = _direction(self.datum.rank).real
            slopes = self.datum.root_values(direction)
            cap = 1.0 / float(np.max(np.abs(slopes)))
            radius = _circle_radius(walls[None, :], slopes, cap) or 0.5 * cap
            values = np.mean(
                [self._regular_h(coords, h + z * direction) for z in _circle_nodes(radius)], axis=0
            )
        if not np.all(np.isfinite(values)):
            raise ExtrapolationError(f"{self.datum.name}: H={h.tolist()} 벽 근방 평가 실패")
        return values


def phi_complex(datum, point, radial):
    """φ_λ(exp H) (복소 경우), point 는 SpectralPoint 또는 배열, radial 은 RadialPoint 또는 h 배열"""
    coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
    h = radial.array if isinstance(radial, RadialPoint) else np.asarray(radial, dtype=complex)
    values = ComplexCasePhi(datum)(coords, h)
    return complex(values[0]) if np.ndim(coords) == 1 else values
