#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
감마 함수 형태와 짝수 가중치 형태

    A(λ) = a(λ) ∏ Γ(λ_j - ρ_j + 1),        B(λ) = b(λ) / ∏ Γ(λ_j - ρ_j + 1)
    Ã(λ) = A(λ) / ∏ cos(π(λ_j - ρ_j)/2),   B̃(λ) = B(λ) ∏ cos(π(λ_j - ρ_j)/2)

    F(exp H) = Σ_μ (-1)^{|μ|} d(μ) A(μ+ρ) ψ_μ / μ!
    F̃(exp H) = Σ_μ (-1)^{|μ|} d(2μ) Ã(2μ+ρ) ψ_{2μ} / (2μ)!

AB = ab 와 ÃB̃ = ab 이므로 보간 우변은 세 형태 모두 같은 ã 입니다.
F̃ 는 모든 좌표가 짝수인 μ 만 모은 f 급수이고, 부호 벡터 ε 에 대한 평균
2^{-l} Σ_ε Σ_μ ε^μ d(μ) a(μ+ρ) ψ_μ 와 같아야 합니다.
"""

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from config.settings import SAMPLING_CONFIG
from numerics.special import cgamma, cospi
from roots.tubes import TubeKind, tube_mask, sigma_m_limits
from master.series import SeriesConfig, as_radial, truncation_height, series_f
from master.space import as_space
from utils.errors import DomainViolationError, ContinuationDomainError

# 로거 설정
logger = logging.getLogger(__name__)

# cos(πk/2), k mod 4
_QUARTER_COS = (1, 0, -1, 0)


def _shifted(space, coords):
    return np.asarray(coords, dtype=complex) - space.datum.rho_coords


def _gamma_product(space, coords):
    """
    ∏ Γ(λ_j - ρ_j + 1)

    Raises:
        GammaPoleError: λ_j - ρ_j + 1 이 0 이하의 정수
    """
    return np.prod(cgamma(_shifted(space, coords) + 1.0), axis=-1)


def _cos_product(space, coords):
    return np.prod(cospi(0.5 * _shifted(space, coords)), axis=-1)


def A_weights(space, a, coords):
    """
    A(λ) 만 계산

    격자 λ = μ+ρ 는 b 의 극 위이므로 급수 계수는 B 없이 구합니다.
    """
    space = as_space(space)
    coords = np.asarray(coords, dtype=complex)
    return a(coords) * _gamma_product(space, coords)


def A_tilde_weights(space, a, coords):
    """Ã(λ) 만 계산 (cos 영점인 홀수 격자점에서는 쓰지 않음)"""
    space = as_space(space)
    coords = np.asarray(coords, dtype=complex)
    return A_weights(space, a, coords) / _cos_product(space, coords)


def gamma_weights(space, a, coords):
    """(A, B) 값, 일반 λ 전용"""
    space = as_space(space)
    coords = np.asarray(coords, dtype=complex)
    gamma = _gamma_product(space, coords)
    return a(coords) * gamma, space.bfunction.b_eval(coords) / gamma


def tilde_weights(space, a, coords):
    """(Ã, B̃) 값"""
    space = as_space(space)
    coords = np.asarray(coords, dtype=complex)
    A, B = gamma_weights(space, a, coords)
    cos = _cos_product(space, coords)
    return A / cos, B * cos


def identity_check(space, a, n_points=100, seed=None):
    """
    임의의 일반 λ 에서 AB = ab, ÃB̃ = ab 의 최대 상대 오차

    Returns:
        tuple: (AB 오차, ÃB̃ 오차)
    """
    space = as_space(space)
    seed = SAMPLING_CONFIG["SEED"] if seed is None else seed
    rng = np.random.default_rng(seed)
    datum = space.datum
    limit = 0.9 * float(np.min(sigma_m_limits(datum)))
    coords = rng.uniform(-limit, limit, (n_points, datum.rank)) + 1j * rng.uniform(-3.0, 3.0, (n_points, datum.rank))
    coords = coords[tube_mask(datum, coords, TubeKind.T, a.certificate.delta)]

    reference = a(coords) * space.bfunction.b_eval(coords)
    A, B = gamma_weights(space, a, coords)
    At, Bt = tilde_weights(space, a, coords)
    scale = np.maximum(np.abs(reference), 1e-300)
    gamma_err = float(np.max(np.abs(A * B - reference) / scale))
    tilde_err = float(np.max(np.abs(At * Bt - reference) / scale))
    logger.debug(f"{space.name} [{a.name}]: AB 오차 {gamma_err:.2e}, ÃB̃ 오차 {tilde_err:.2e} ({len(coords)}점)")
    return gamma_err, tilde_err


def _factorial(mus):
    """μ! = ∏ Γ(μ_j + 1)"""
    return np.prod(cgamma(np.asarray(mus, dtype=float) + 1.0), axis=-1).real


def gamma_series(space, a, H, cfg=None):
    """F(exp H) = Σ (-1)^{|μ|} d(μ) A(μ+ρ) ψ_μ / μ!"""
    space = as_space(space)
    cfg = cfg or SeriesConfig()
    radial = as_radial(H)
    height, _ = truncation_height(space, a, radial.norm(space.datum), cfg)
    mus, dims, heights = space.weight_table(height)
    lam = mus + space.datum.rho_coords
    A = A_weights(space, a, lam)
    terms = (-1.0) ** heights * dims * A / _factorial(mus) * space.evaluator.phi(lam, radial)
    return complex(np.sum(terms))


def tilde_coefficients(space, a, height):
    """
    높이 ≤ height 의 모든 μ 에 대한 (-1)^{|μ|} d(μ) Ã(μ+ρ) ∏cos(πμ_j/2) / μ!

    홀수 좌표가 있는 μ 의 계수는 정확히 0 입니다.

    Returns:
        tuple: (μ 배열, 계수 배열)
    """
    space = as_space(space)
    mus, dims, heights = space.weight_table(height)
    weights = np.array([np.prod([_QUARTER_COS[int(k) % 4] for k in mu]) for mu in mus], dtype=float)
    coefficients = np.zeros(len(mus), dtype=complex)
    even = weights != 0
    if np.any(even):
        lam = mus[even] + space.datum.rho_coords
        At = A_tilde_weights(space, a, lam)
        coefficients[even] = (-1.0) ** heights[even] * dims[even] * At * weights[even] / _factorial(mus[even])
    return mus, coefficients


def tilde_series(space, a, H, cfg=None):
    """F̃(exp H) = Σ_ν (-1)^{|ν|} d(2ν) Ã(2ν+ρ) ψ_{2ν} / (2ν)!"""
    space = as_space(space)
    cfg = cfg or SeriesConfig()
    radial = as_radial(H)
    height, _ = truncation_height(space, a, radial.norm(space.datum), cfg)
    mus, dims, heights = space.weight_table(height)
    even = np.all(mus % 2 == 0, axis=-1)
    mus, dims = mus[even], dims[even]
    lam = mus + space.datum.rho_coords
    At = A_tilde_weights(space, a, lam)
    signs = (-1.0) ** (heights[even] // 2)
    terms = signs * dims * At / _factorial(mus) * space.evaluator.phi(lam, radial)
    return complex(np.sum(terms))


def parity_average(space, a, H, cfg=None):
    """2^{-l} Σ_{ε∈{±1}^l} Σ_μ ε^μ d(μ) a(μ+ρ) ψ_μ"""
    space = as_space(space)
    cfg = cfg or SeriesConfig()
    radial = as_radial(H)
    height, _ = truncation_height(space, a, radial.norm(space.datum), cfg)
    mus, dims, _ = space.weight_table(height)
    lam = mus + space.datum.rho_coords
    base = dims * a(lam) * space.evaluator.phi(lam, radial)
    total = 0.0j
    for signs in itertools.product((1.0, -1.0), repeat=space.rank):
        total += np.sum(np.prod(np.array(signs) ** mus, axis=-1) * base)
    return complex(total / 2 ** space.rank)


@dataclass
class GammaVariantResult:
    """gamma_variants 결과"""
    space: str
    hardy: str
    identity_error: float
    tilde_identity_error: float
    f_series: complex
    F_series: complex
    tilde_series: complex
    parity_series: complex
    odd_coefficients_zero: bool
    interpolation: list = field(default_factory=list)


def gamma_variants(space, a, points, H=None, cfg=None, n_identity=100, seed=None):
    """
    감마 형태 (A, B) 와 짝수 가중치 형태 (Ã, B̃) 의 급수와 보간 우변 확인

    Args:
        space: 닫힌 형태 구면 함수가 있는 공간
        a: HardyFunction
        points: 보간 우변을 비교할 λ 목록 (T_δ ∩ T_{Σ,m} 안의 일반 점)
        H: 급수 비교 점 (기본값 원점)

    Returns:
        GammaVariantResult (interpolation 은 (λ, ã, Σ_w AB, Σ_w ÃB̃) 목록)

    Raises:
        GammaPoleError: 요청한 점에서 Γ(λ_j - ρ_j + 1) 의 극
        DomainViolationError: W 특이점 근방의 λ
    """
    space = as_space(space)
    space.require_evaluator()
    a.require_certified()
    cfg = cfg or SeriesConfig()
    H = np.zeros(space.rank) if H is None else H
    radial = as_radial(H)
    if not radial.in_closed_omega_pi(space.datum):
        raise ContinuationDomainError(f"{space.name}: Im H={radial} 가 Ω̄_π 밖입니다")

    gamma_err, tilde_err = identity_check(space, a, n_identity, seed)
    f_value = series_f(space, a, radial, cfg).value
    F_value = gamma_series(space, a, radial, cfg)
    tilde_value = tilde_series(space, a, radial, cfg)
    parity_value = parity_average(space, a, radial, cfg)

    height, _ = truncation_height(space, a, radial.norm(space.datum), cfg)
    mus, coefficients = tilde_coefficients(space, a, min(height, 12))
    odd = np.any(mus % 2 == 1, axis=-1)
    odd_zero = bool(np.all(coefficients[odd] == 0))

    datum = space.datum
    rows = []
    for lam in points:
        coords = np.atleast_1d(np.asarray(lam, dtype=complex))
        if np.any(np.abs(datum.lambda_star(coords)) < 1e-3):
            raise DomainViolationError(f"{space.name}: λ={coords.tolist()} 는 W 특이점 근방이라 항별 비교를 할 수 없습니다")
        orbit = datum.orbit_coords(coords)
        plain = complex(np.sum(a(orbit) * space.bfunction.b_eval(orbit)))
        A, B = gamma_weights(space, a, orbit)
        At, Bt = tilde_weights(space, a, orbit)
        rows.append((complex(coords[0]) if datum.rank == 1 else tuple(coords.tolist()),
                     plain, complex(np.sum(A * B)), complex(np.sum(At * Bt))))

    logger.info(
        f"{space.name} [{a.name}]: f={f_value:.12g}, F={F_value:.12g}, F̃={tilde_value:.12g}, "
        f"패리티 평균={parity_value:.12g}"
    )
    return GammaVariantResult(
        space=space.name, hardy=a.name,
        identity_error=gamma_err, tilde_identity_error=tilde_err,
        f_series=f_value, F_series=F_value,
        tilde_series=tilde_value, parity_series=parity_value,
        odd_coefficients_zero=odd_zero, interpolation=rows,
    )
