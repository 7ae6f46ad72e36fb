#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Harish-Chandra c 함수

Gindikin-Karpelevich 곱 공식을 곱할 수 없는 양근 Σ*⁺ 에 대해 계산합니다.

    c(λ) = c₀ ∏_β c_β(λ_β)
    c_β(λ) = 2^{-2λ} Γ(2λ) / (Γ(λ + m_(β/2)/4 + 1/2) Γ(λ + m_(β/2)/4 + m_β/2))

c₀ 는 c(ρ) = 1 로 정합니다. Γ(2λ) 가 극점에 놓이면 배가 공식으로
약분한 형태를 사용합니다.
"""

import logging

import numpy as np

from numerics.special import cgamma, rgamma, gamma_ratio, is_nonpositive_integer
from roots.root_system import SpectralPoint
from utils.errors import GammaPoleError, MasterTheoremError

# 로거 설정
logger = logging.getLogger(__name__)

_SQRT_PI = np.sqrt(np.pi)


def _as_coords(point):
    if isinstance(point, SpectralPoint):
        return point.array
    return np.asarray(point, dtype=complex)


def c_beta_literal(lam, half_mult, mult):
    """배가 공식을 적용하지 않은 c_β (Γ(2λ) 극점 제외)"""
    lam = np.asarray(lam, dtype=complex)
    shift = half_mult / 4.0
    return 2.0 ** (-2.0 * lam) * cgamma(2.0 * lam) * rgamma(lam + shift + 0.5) * rgamma(lam + shift + mult / 2.0)


def c_beta_reduced(lam, half_mult, mult):
    """
    Γ(2λ) = 2^{2λ-1} Γ(λ) Γ(λ+1/2) / √π 로 약분한 c_β

    두 감마 비율의 짝짓기 중 차이가 정수인 쪽을 골라 제거 가능한 극점을 없앱니다.
    """
    lam = np.asarray(lam, dtype=complex)
    shift = half_mult / 4.0
    pairings = (
        ((lam + 0.5, shift), (lam, shift + mult / 2.0)),
        ((lam, shift + 0.5), (lam + 0.5, shift + mult / 2.0 - 0.5)),
    )

    def integral(pair):
        return all(abs(d - round(d)) < 1e-12 and d >= 0 for _, d in pair)

    chosen = next((p for p in pairings if integral(p)), pairings[0])
    (x1, d1), (x2, d2) = chosen
    return gamma_ratio(x1, d1) * gamma_ratio(x2, d2) / (2.0 * _SQRT_PI)


def c_beta(lam, half_mult, mult):
    """
    단일 β 에 대한 c_β(λ_β) (벡터화)

    Raises:
        GammaPoleError: 진짜 극점
    """
    scalar = np.ndim(lam) == 0
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    out = np.empty(lam.shape, dtype=complex)
    reduced = is_nonpositive_integer(2.0 * lam, gap=1e-13)
    if np.any(~reduced):
        out[~reduced] = c_beta_literal(lam[~reduced], half_mult, mult)
    if np.any(reduced):
        out[reduced] = c_beta_reduced(lam[reduced], half_mult, mult)
    return complex(out[0]) if scalar else out


class CFunction:
    """
    RootDatum 에 대한 c 함수

    Attributes:
        datum: RootDatum
        c0: c(ρ) = 1 정규화 상수
    """

    def __init__(self, datum):
        self.datum = datum
        rho_values = [
            c_beta(float(rho), int(half), int(mult))
            for rho, half, mult in zip(datum.rho_star, datum.star_half_mult, datum.star_mult)
        ]
        self.c0 = 1.0 / complex(np.prod(rho_values))

        residual = abs(self(datum.rho_coords) - 1.0)
        if residual > 1e-12:
            raise MasterTheoremError(f"c(ρ) 정규화 잔차 {residual:.2e}: {datum.name}")
        logger.debug(f"c 함수 생성: {datum.name}, c₀={self.c0:.12g}")

    def beta_values(self, point):
        """
        β 별 c_β(λ_β), 모양 (..., |Σ*⁺|)

        Raises:
            GammaPoleError: 극점 (β 벡터와 함께 보고)
        """
        coords = _as_coords(point)
        lam_star = self.datum.lambda_star(coords)
        out = np.empty(lam_star.shape, dtype=complex)
        for k, (half, mult) in enumerate(zip(self.datum.star_half_mult, self.datum.star_mult)):
            try:
                out[..., k] = c_beta(lam_star[..., k], int(half), int(mult))
            except GammaPoleError as e:
                root = self.datum.star_roots[k]
                raise GammaPoleError(
                    f"c_β 극점 (β={np.round(root, 6).tolist()}, 중복도 {int(half)}/{int(mult)}): {e}",
                    root=root,
                )
        return out

    def __call__(self, point):
        """c(λ) = c₀ ∏ c_β(λ_β)"""
        values = self.c0 * np.prod(self.beta_values(point), axis=-1)
        return complex(values) if np.ndim(values) == 0 else values

    def density(self, point):
        """
        Plancherel 밀도 1/(c(λ)c(-λ))

        Raises:
            GammaPoleError: c(λ) 또는 c(-λ) 의 극점, 혹은 c(λ)c(-λ) = 0
        """
        coords = _as_coords(point)
        product = np.asarray(self(coords) * self(-coords))
        if np.any(product == 0):
            raise GammaPoleError(f"c(λ)c(-λ) = 0 인 점에서 밀도 평가: {self.datum.name}")
        values = 1.0 / product
        return complex(values) if values.ndim == 0 else values


def c_function(datum, point):
    """c(λ) 단일 평가 편의 함수"""
    return CFunction(datum)(point)


def density(datum, point):
    """1/(c(λ)c(-λ)) 단일 평가 편의 함수"""
    return CFunction(datum).density(point)
