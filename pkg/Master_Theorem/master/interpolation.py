#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
3부: 보간 항등식 (계수 1)

    κ ∫_0^∞ f(a_t) φ_{-λ}(a_t) J(t) dt = ã(λ),   J(t) = (2 sinh t)^{m_{β/2}} (2 sinh 2t)^{m_β}

f(a_t) 는 σ = 0 윤곽 표현으로 t 격자 전체에서 한 번 계산해 둡니다 (RadialProfile).
동경 측도의 절대 상수 κ 는 공간마다 기준점 (λ*, a* = e^{-λ}) 에서 한 번 정하고,
다른 모든 λ 와 Hardy 함수에서 검증합니다. 기준점은 판정 통계에서 제외합니다.
"""

import logging
import threading
from dataclasses import dataclass

import numpy as np

from bfunction.symmetrize import a_tilde, contour_integrand_factor
from config.settings import QUAD_CONFIG
from hardy.builtins import exp_decay
from numerics.quadrature import QuadratureConfig, composite_nodes, choose_halfwidth, exponential_tail
from roots.root_system import SpectralPoint
from roots.tubes import TubeKind, tube_mask, sigma_m_limits
from spherical.radial import RadialPoint
from master.space import as_space
from utils.errors import UnsupportedSpaceError, DomainViolationError, TailFitError

# 로거 설정
logger = logging.getLogger(__name__)

# 동경 격자 상한과 절단 기준
RADIAL_MAX = 24.0
CUT_RELATIVE = 1e-7
TAIL_WINDOW = 2.0
# f(a_t) 반올림 잡음 상대 수준과 신뢰 배수
NOISE_RELATIVE = 1e-15
TRUST_FACTOR = 1e5
# 꼬리 모형 적합 창, 잔차 상한, 모형 적분 상한과 절단 기준
MODEL_WINDOW = 4.0
MODEL_RESIDUAL = 1e-3
MODEL_MAX = 80.0
MODEL_CUT = 1e-11
# 기준점 λ* = CALIBRATION_FRACTION × min(ρ̃, T_{Σ,m} 상한)
CALIBRATION_FRACTION = 0.3
# 검증 격자
GRID_REAL_FRACTIONS = (-0.3, -0.1, 0.1, 0.25, 0.35)
GRID_IMAG = (0.0, 0.5, 2.0, 5.0)

_calibration_lock = threading.Lock()
_calibrations = {}


def radial_density(datum, t):
    """J(t) = (2 sinh t)^{m_{β/2}} (2 sinh 2t)^{m_β}"""
    t = np.asarray(t, dtype=float)
    half = int(datum.star_half_mult[0])
    mult = int(datum.star_mult[0])
    return (2.0 * np.sinh(t)) ** half * (2.0 * np.sinh(2.0 * t)) ** mult


def _require_rank_one(space):
    if space.rank != 1:
        raise UnsupportedSpaceError(
            f"{space.name}: 보간 항등식의 동경 적분은 계수 1 공간에서만 지원합니다"
        )
    return space.require_evaluator()


def lambda_scale(space, delta=1.0):
    """T_δ ∩ T_{Σ,m} 안의 실수부 상한 (λ₁ 단위)"""
    datum = space.datum
    return float(min(delta * datum.rho_tilde[0], sigma_m_limits(datum)[0]))


@dataclass
class RadialProfile:
    """
    t 격자 위의 f(a_t)

    Attributes:
        t, weights: 복합 Gauss-Legendre 노드와 가중치 ([0, RADIAL_MAX])
        values: f(a_t)
        density: J(t)
        noise: f(a_t) 반올림 잡음 추정
        switch: 꼬리 모형으로 바꾸는 t (모형이 없으면 RADIAL_MAX)
        model: log f ≈ c + s t + p log t 의 (c, s, p) 또는 None
    """
    space_name: str
    hardy_name: str
    t: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    density: np.ndarray
    halfwidth: float
    noise: np.ndarray = None
    switch: float = RADIAL_MAX
    model: tuple = None


def radial_profile(space, a, cfg=None):
    """
    σ = 0 윤곽으로 t 격자 전체의 f(a_t) 계산

    반올림 잡음 추정 ε Σ|k_j||φ_{iy_j}(a_t)| 보다 충분히 큰 구간 끝에서
    f(a_t) ≈ exp(c + s t + p log t) 모형을 적합해 둡니다.

    Raises:
        UnsupportedSpaceError: 계수 1 이 아닌 공간
        DecayCertificateError: 절단 반폭 선택 실패
    """
    space = as_space(space)
    evaluator = _require_rank_one(space)
    a.require_certified()
    cfg = cfg or QuadratureConfig()

    def factor(points):
        return contour_integrand_factor(space.bfunction, a, np.asarray(points, dtype=complex))

    halfwidth = choose_halfwidth(factor, [0.0], np.pi - a.certificate.A, space.datum.degree_m, cfg)
    halfwidth = max(halfwidth, cfg.truncation_halfwidth)
    y, w = composite_nodes(-halfwidth, halfwidth, cfg.nodes_per_axis, cfg.panel_width)
    nodes = (1j * y)[:, None]
    # dλ = i dy
    kernel = 1j * w * factor(nodes)

    t, tw = composite_nodes(0.0, RADIAL_MAX, QUAD_CONFIG["NODES_PER_AXIS"], QUAD_CONFIG["PANEL_WIDTH"])
    values = np.empty(t.size, dtype=complex)
    noise = np.empty(t.size)
    for k, s in enumerate(t):
        phi = evaluator.phi(nodes, RadialPoint.from_t(s))
        values[k] = np.dot(kernel, phi)
        noise[k] = NOISE_RELATIVE * np.dot(np.abs(kernel), np.abs(phi))

    switch, model = _fit_decay_model(t, values, noise)
    switch_note = f"모형 전환 t={switch:g}" if model is not None else "모형 없음"
    logger.debug(f"{space.name} [{a.name}]: 동경 분포 {t.size}점 계산 (L={halfwidth}), {switch_note}")
    return RadialProfile(
        space_name=space.name, hardy_name=a.name, t=t, weights=tw,
        values=values, density=radial_density(space.datum, t), halfwidth=halfwidth,
        noise=noise, switch=switch, model=model,
    )


def _fit_decay_model(t, values, noise):
    """
    신뢰 구간 끝 [T - MODEL_WINDOW, T] 에서 log f = c + s t + p log t 적합

    T 는 그 앞의 모든 노드가 |f| > TRUST_FACTOR × 잡음 을 만족하는 마지막 패널 경계입니다.

    Returns:
        tuple: (T, (c, s, p)) 또는 (RADIAL_MAX, None)
    """
    width = QUAD_CONFIG["PANEL_WIDTH"]
    trusted = np.abs(values) > TRUST_FACTOR * noise
    first_bad = t.size if np.all(trusted) else int(np.argmin(trusted))
    if first_bad == 0:
        return RADIAL_MAX, None
    switch = width * np.floor(t[first_bad - 1] / width) if first_bad < t.size else RADIAL_MAX
    if switch - MODEL_WINDOW < 1.0:
        return RADIAL_MAX, None

    window = (t >= switch - MODEL_WINDOW) & (t <= switch)
    u, sample = t[window], values[window]
    design = np.column_stack([np.ones_like(u), u, np.log(u)])
    log_mag = np.log(np.abs(sample))
    coeffs, *_ = np.linalg.lstsq(design, log_mag, rcond=None)
    residual = float(np.max(np.abs(design @ coeffs - log_mag)))
    phase = np.unwrap(np.angle(sample))
    phase_slope, phase_intercept = np.polyfit(u, phase, 1)
    phase_residual = float(np.max(np.abs(phase_slope * u + phase_intercept - phase)))
    decaying = coeffs[1] + max(coeffs[2], 0.0) / switch < 0
    if residual > MODEL_RESIDUAL or phase_residual > MODEL_RESIDUAL or not decaying:
        logger.debug(f"동경 꼬리 모형 적합 실패 (잔차 {residual:.2e}, 위상 잔차 {phase_residual:.2e})")
        return RADIAL_MAX, None
    model = (complex(coeffs[0], phase_intercept), complex(coeffs[1], phase_slope), float(coeffs[2]))
    return float(switch), model


def _model_values(model, t):
    c, s, p = model
    return np.exp(c + s * t + p * np.log(t))


def _cut_integral(t, weights, values):
    """
    |g| 가 누적 적분의 CUT_RELATIVE 배 아래로 떨어지는 곳까지 적분하고 지수 꼬리를 더함

    Raises:
        TailFitError: 격자 안에서 절단점을 찾지 못함
    """
    width = QUAD_CONFIG["PANEL_WIDTH"]
    running = np.cumsum(weights * values)
    for end in np.arange(4.0, RADIAL_MAX + 1e-9, width):
        inside = t <= end
        next_panel = (t > end) & (t <= end + width)
        if not np.any(next_panel):
            break
        partial = running[np.nonzero(inside)[0][-1]]
        if np.max(np.abs(values[next_panel])) < CUT_RELATIVE * max(abs(partial), 1e-300):
            window = inside & (t >= end - TAIL_WINDOW)
            tail, _ = exponential_tail(t[window], values[window])
            return complex(partial + tail), float(end), tail
    raise TailFitError(f"t ≤ {RADIAL_MAX} 안에서 동경 적분 절단점을 찾지 못함")


def _profile_integral(space, profile, multiplier, squared=False):
    """
    ∫_0^∞ F(a_t) m(t) dt, F = f 또는 |f|²

    모형이 있으면 [0, T] 는 계산값, [T, ∞) 는 모형 f 로 패널 단위로 적분하고
    패널 최대 |피적분| 이 누적값의 MODEL_CUT 배 아래가 되면 멈춥니다.
    모형이 없으면 계산 격자 위 절단 적분으로 돌아갑니다.

    Args:
        multiplier: t 배열 -> m(t) 배열

    Returns:
        tuple: (값, 절단점, [T, ∞) 기여)

    Raises:
        TailFitError: MODEL_MAX 안에서 감쇠하지 않음
    """
    def transform(v):
        return np.abs(v) ** 2 + 0j if squared else v

    if profile.model is None:
        integrand = transform(profile.values) * multiplier(profile.t)
        return _cut_integral(profile.t, profile.weights, integrand)

    head = profile.t < profile.switch
    t = profile.t[head]
    partial = complex(np.sum(profile.weights[head] * transform(profile.values[head]) * multiplier(t)))
    width = QUAD_CONFIG["PANEL_WIDTH"]
    tail = 0.0j
    start = profile.switch
    while start < MODEL_MAX:
        u, w = composite_nodes(start, start + width, QUAD_CONFIG["NODES_PER_AXIS"], width)
        g = transform(_model_values(profile.model, u)) * multiplier(u)
        tail += complex(np.sum(w * g))
        start += width
        if np.max(np.abs(g)) < MODEL_CUT * max(abs(partial + tail), 1e-300):
            return partial + tail, float(start), tail
    raise TailFitError(f"{space.name}: t ≤ {MODEL_MAX} 안에서 모형 꼬리가 감쇠하지 않음")


def _phi_along(evaluator, lam, t):
    return np.array([evaluator.phi(np.array([-lam]), RadialPoint.from_t(s)) for s in t])


def lhs_raw(space, profile, lam):
    """∫ f(a_t) φ_{-λ}(a_t) J(t) dt (보정 전)"""
    space = as_space(space)
    evaluator = _require_rank_one(space)
    lam = _as_lambda(lam)

    def multiplier(t):
        return _phi_along(evaluator, lam, t) * radial_density(space.datum, t)

    return _profile_integral(space, profile, multiplier)


def _as_lambda(lam):
    coords = lam.array if isinstance(lam, SpectralPoint) else lam
    return complex(np.ravel(np.asarray(coords, dtype=complex))[0])


def _check_tube(space, lam, delta):
    coords = np.array([[lam]], dtype=complex)
    inside = tube_mask(space.datum, coords, TubeKind.T, delta) & tube_mask(space.datum, coords, TubeKind.SIGMA_M)
    if not inside[0]:
        raise DomainViolationError(f"{space.name}: λ={lam} 가 T_δ ∩ T_Σ,m (δ={delta}) 밖입니다")


def calibrate(space):
    """
    기준점 (λ*, e^{-λ}) 에서 κ = ã(λ*) / ∫ f φ_{-λ*} J 를 한 번 계산 (공간별 캐시)

    Returns:
        tuple: (κ, λ*)
    """
    space = as_space(space)
    with _calibration_lock:
        if space.name in _calibrations:
            return _calibrations[space.name]
    reference = exp_decay(P=1.0, rank=1)
    lam_star = CALIBRATION_FRACTION * lambda_scale(space)
    profile = radial_profile(space, reference)
    raw, _, _ = lhs_raw(space, profile, lam_star)
    kappa = complex(a_tilde(space.bfunction, reference, np.array([lam_star])) / raw)
    logger.info(f"{space.name}: 동경 측도 상수 κ = {kappa:.12g} (λ*={lam_star:g})")
    with _calibration_lock:
        _calibrations[space.name] = (kappa, lam_star)
    return kappa, lam_star


@dataclass
class InterpolationResult:
    """interpolate_symm 결과"""
    lam: complex
    lhs: complex
    rhs: complex
    kappa: complex
    cut: float
    tail: complex

    @property
    def ratio(self):
        return self.lhs / self.rhs


def interpolate_symm(space, a, lam, profile=None):
    """
    κ ∫ f φ_{-λ} J dt 와 ã(λ)

    Args:
        space: 계수 1 공간
        a: HardyFunction
        lam: λ₁ (복소수) 또는 SpectralPoint
        profile: 미리 계산한 RadialProfile (없으면 계산)

    Returns:
        InterpolationResult

    Raises:
        UnsupportedSpaceError: 계수 1 이 아닌 공간
        DomainViolationError: λ ∉ T_δ ∩ T_{Σ,m}
        TailFitError: 동경 적분 꼬리 적합 실패
    """
    space = as_space(space)
    _require_rank_one(space)
    a.require_certified()
    lam = _as_lambda(lam)
    _check_tube(space, lam, a.certificate.delta)

    kappa, _ = calibrate(space)
    profile = profile or radial_profile(space, a)
    raw, cut, tail = lhs_raw(space, profile, lam)
    rhs = complex(a_tilde(space.bfunction, a, np.array([lam])))
    return InterpolationResult(lam=lam, lhs=kappa * raw, rhs=rhs, kappa=kappa, cut=cut, tail=kappa * tail)


def l2_identity(space, a, profile=None, halfwidth=None):
    """
    ∫|f|² J dt  와  (1/|W|) (i/κ̄) ∫ |ã(iy)|² / |c(iy)|² dy

    Returns:
        tuple: (lhs, rhs)
    """
    space = as_space(space)
    _require_rank_one(space)
    kappa, _ = calibrate(space)
    profile = profile or radial_profile(space, a)
    lhs, _, _ = _profile_integral(space, profile, lambda t: radial_density(space.datum, t), squared=True)

    halfwidth = halfwidth or max(QUAD_CONFIG["TRUNCATION_HALFWIDTH"], 30.0 / (np.pi - a.certificate.A))
    y, w = composite_nodes(-halfwidth, halfwidth, QUAD_CONFIG["NODES_PER_AXIS"], QUAD_CONFIG["PANEL_WIDTH"])
    nodes = (1j * y)[:, None]
    tilde = a_tilde(space.bfunction, a, nodes)
    density = np.abs(space.cfunction.density(nodes))
    spectral = np.sum(w * np.abs(tilde) ** 2 * density)
    rhs = (1j / np.conj(kappa)) * spectral / space.datum.weyl_order
    return complex(lhs), complex(rhs)


def holomorphy_probe(space, a, lam, step=1e-3, profile=None):
    """
    λ 의 실수, 허수 방향 중심 차분을 lhs 와 rhs 에 대해 계산

    Returns:
        dict: {"real": (lhs 차분, rhs 차분), "imag": (lhs 차분, rhs 차분)}
    """
    space = as_space(space)
    profile = profile or radial_profile(space, a)
    lam = complex(lam)
    out = {}
    for name, direction in (("real", 1.0), ("imag", 1j)):
        plus = interpolate_symm(space, a, lam + step * direction, profile)
        minus = interpolate_symm(space, a, lam - step * direction, profile)
        scale = 2.0 * step * direction
        out[name] = ((plus.lhs - minus.lhs) / scale, (plus.rhs - minus.rhs) / scale)
    return out


def interpolation_grid(space, delta=1.0):
    """
    T_δ ∩ T_{Σ,m} 안의 검증용 λ 격자 20점 (기준점 제외)

    실수부는 상한의 비율, 허수부는 절대값입니다.
    """
    scale = lambda_scale(as_space(space), delta)
    return [
        complex(fraction * scale, imag)
        for fraction in GRID_REAL_FRACTIONS
        for imag in GRID_IMAG
    ]
