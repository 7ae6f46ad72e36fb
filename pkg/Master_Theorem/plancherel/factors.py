#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Plancherel 밀도의 인수분해

각 β ∈ Σ*⁺ 에 대해 1/(c_β(λ)c_β(-λ)) = C_β p_β(λ) q_β(λ) 로 분해합니다.

    C_β = 4π ε(β)
    p_β: 실근 목록으로 저장한 다항식
    q_β = 1 (m_β 짝수) 또는 cot(π(λ_β - ρ̃_β)) (m_β 홀수)
"""

import logging
from dataclasses import dataclass

import numpy as np

from numerics.special import sinpi, cospi
from roots.root_system import SpectralPoint, multiplicity_case
from utils.errors import FactorizationError

# 로거 설정
logger = logging.getLogger(__name__)

# 양수성 검사용 허수축 표본
_POSITIVITY_PROBES = (0.37, 1.1, 2.9)


@dataclass(frozen=True)
class BetaFactor:
    """단일 β 의 인수 (C_β, p_β 근, q_β 종류)"""
    index: int
    half_mult: int
    mult: int
    rho_tilde: float
    constant: float
    roots: tuple
    cotangent: bool
    case: str

    @property
    def degree(self):
        return len(self.roots)

    def p(self, lam):
        lam = np.asarray(lam, dtype=complex)
        value = np.ones(lam.shape, dtype=complex)
        for r in self.roots:
            value = value * (lam - r)
        return value

    def q(self, lam):
        lam = np.asarray(lam, dtype=complex)
        if not self.cotangent:
            return np.ones(lam.shape, dtype=complex)
        x = lam - self.rho_tilde
        return cospi(x) / sinpi(x)

    def t(self, lam):
        """q_β 의 역수 t_β"""
        lam = np.asarray(lam, dtype=complex)
        if not self.cotangent:
            return np.ones(lam.shape, dtype=complex)
        x = lam - self.rho_tilde
        return sinpi(x) / cospi(x)

    def evaluate(self, lam):
        """C_β p_β(λ) q_β(λ)"""
        return self.constant * self.p(lam) * self.q(lam)


def _sign(half_mult, mult):
    if mult % 2 == 0:
        return (-1) ** (mult // 2)
    return (-1) ** ((half_mult + mult - 1) // 2)


def _polynomial_roots(half_mult, rho_tilde):
    """
    p_β 의 실근 목록

    {0} ∪ {ρ̃ - k : k = 1, …, 2ρ̃-1} ∪ {m_(β/2)/4 - 1/2 - k : k = 0, …, m_(β/2)/2 - 1}
    ρ̃ = 1/2 이면 p_β = λ_β, ρ̃ = 1 이고 m_(β/2) = 0 이면 p_β = λ_β² 입니다.
    """
    roots = [0.0]
    steps = int(round(2.0 * rho_tilde)) - 1
    roots.extend(rho_tilde - k for k in range(1, steps + 1))
    roots.extend(half_mult / 4.0 - 0.5 - k for k in range(half_mult // 2))
    return tuple(float(r) for r in roots)


class DensityFactors:
    """
    RootDatum 전체의 밀도 인수

    Attributes:
        datum: RootDatum
        factors: β 별 BetaFactor 목록 (Σ*⁺ 순서)
    """

    def __init__(self, datum):
        self.datum = datum
        self.factors = []
        for k, (half, mult, rho_tilde) in enumerate(
            zip(datum.star_half_mult, datum.star_mult, datum.rho_tilde)
        ):
            half, mult = int(half), int(mult)
            factor = BetaFactor(
                index=k,
                half_mult=half,
                mult=mult,
                rho_tilde=float(rho_tilde),
                constant=4.0 * np.pi * _sign(half, mult),
                roots=_polynomial_roots(half, float(rho_tilde)),
                cotangent=mult % 2 == 1,
                case=multiplicity_case(half, mult),
            )
            if factor.degree != half + mult:
                raise FactorizationError(
                    f"deg p_β = {factor.degree} ≠ m_(β/2)+m_β = {half + mult} ({datum.name}, β#{k})"
                )
            self._check_positivity(factor)
            self.factors.append(factor)
        self.p_rho = complex(self.polynomial(datum.rho_coords)).real

    def _check_positivity(self, factor):
        """허수축에서 C_β p_β q_β > 0"""
        for y in _POSITIVITY_PROBES:
            value = complex(factor.evaluate(1j * y))
            if value.real <= 0 or abs(value.imag) > 1e-10 * abs(value):
                raise FactorizationError(
                    f"{self.datum.name} β#{factor.index}: iℝ 위 밀도 인수가 양수가 아님 "
                    f"(λ_β={y}i, 값={value})"
                )

    @property
    def constants(self):
        return np.array([f.constant for f in self.factors])

    def lambda_star(self, point):
        coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
        return self.datum.lambda_star(coords)

    def factor_eval(self, index, point):
        """β#index 에 대한 C_β p_β(λ) q_β(λ)"""
        lam = self.lambda_star(point)[..., index]
        value = self.factors[index].evaluate(lam)
        return complex(value) if np.ndim(value) == 0 else value

    def polynomial(self, point):
        """P(λ) = ∏_β p_β(λ_β)"""
        lam = self.lambda_star(point)
        value = np.ones(lam.shape[:-1], dtype=complex)
        for factor in self.factors:
            value = value * factor.p(lam[..., factor.index])
        return complex(value) if value.ndim == 0 else value

    def trig_product(self, point):
        """T(λ) = ∏_β t_β(λ_β)"""
        lam = self.lambda_star(point)
        value = np.ones(lam.shape[:-1], dtype=complex)
        for factor in self.factors:
            value = value * factor.t(lam[..., factor.index])
        return complex(value) if value.ndim == 0 else value

    def density_factored(self, point, c0):
        """
        인수분해 경로의 Plancherel 밀도 c₀⁻² ∏ C_β p_β q_β
        """
        lam = self.lambda_star(point)
        value = np.full(lam.shape[:-1], 1.0 / c0 ** 2, dtype=complex)
        for factor in self.factors:
            value = value * factor.evaluate(lam[..., factor.index])
        return complex(value) if value.ndim == 0 else value

    def describe(self):
        """표 출력용 요약"""
        return [
            {
                "beta": np.round(self.datum.star_roots[f.index], 6).tolist(),
                "case": f.case,
                "C_beta": f.constant,
                "p_roots": list(f.roots),
                "q": "cot" if f.cotangent else "1",
                "rho_tilde": f.rho_tilde,
            }
            for f in self.factors
        ]


def density_factors(datum):
    """RootDatum 의 DensityFactors 생성"""
    return DensityFactors(datum)
