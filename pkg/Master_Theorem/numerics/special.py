#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
복소 특수 함수

Lanczos 근사(g=7, 계수 9개)와 반사 공식으로 Γ(z) 를 계산하고,
영역별 변환 공식으로 Gauss 초기하 함수 ₂F₁ 을 계산합니다.
모든 함수는 numpy 배열 입력에 대해 벡터화되어 있고,
스칼라 입력에는 complex 스칼라를 반환합니다.
"""

import logging

import numpy as np

from config.settings import NUMERIC_CONFIG
from utils.errors import (
    GammaPoleError, GammaOverflowError, ConvergenceError, ParameterPoleError
)

# 로거 설정
logger = logging.getLogger(__name__)

_LANCZOS_G = 7
_LANCZOS_COEFFS = np.array([
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7
])
_SQRT_2PI = np.sqrt(2.0 * np.pi)


def _out(values, scalar):
    """스칼라 입력이면 complex 로 변환"""
    if scalar:
        return complex(np.asarray(values).reshape(-1)[0])
    return values


def is_nonpositive_integer(z, gap=0.0):
    """0 이하의 정수인지 판정 (gap 이내의 근접도 포함)"""
    z = np.asarray(z, dtype=complex)
    nearest = np.round(z.real)
    return (np.abs(z.imag) <= gap) & (nearest <= 0) & (np.abs(z.real - nearest) <= gap)


def sinpi(z):
    """
    sin(πz) 를 정수 이동 후 계산

    z - n 이 정확히 계산되므로 정수 근방에서도 상대 정확도가 유지됩니다.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    n = np.round(z.real)
    sign = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)
    return _out(sign * np.sin(np.pi * (z - n)), scalar)


def cospi(z):
    """cos(πz) 를 정수 이동 후 계산"""
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    n = np.round(z.real)
    sign = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)
    return _out(sign * np.cos(np.pi * (z - n)), scalar)


def _lanczos(z):
    """Re z ≥ 1/2 에서의 Lanczos 근사"""
    zm = z - 1.0
    x = np.full(zm.shape, _LANCZOS_COEFFS[0], dtype=complex)
    for i in range(1, len(_LANCZOS_COEFFS)):
        x = x + _LANCZOS_COEFFS[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return _SQRT_2PI * np.exp((zm + 0.5) * np.log(t) - t) * x


def cgamma(z):
    """
    복소 감마 함수 Γ(z)

    Args:
        z: 복소수 또는 복소 배열

    Returns:
        Γ(z) (입력과 같은 모양)

    Raises:
        GammaPoleError: z 가 0 이하의 정수
        GammaOverflowError: |Γ(z)| 가 표현 범위를 넘음
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))

    poles = is_nonpositive_integer(z)
    if np.any(poles):
        bad = z[poles][0]
        raise GammaPoleError(f"감마 함수 극점에서 평가: z={bad.real:g}")

    result = np.empty_like(z)
    left = z.real < 0.5
    with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
        result[~left] = _lanczos(z[~left])
        zl = z[left]
        result[left] = np.pi / (sinpi(zl) * _lanczos(1.0 - zl))

    if not np.all(np.isfinite(result)) or np.any(np.abs(result) > NUMERIC_CONFIG["GAMMA_MAX_ABS"]):
        bad = z[~np.isfinite(result) | (np.abs(result) > NUMERIC_CONFIG["GAMMA_MAX_ABS"])][0]
        raise GammaOverflowError(f"감마 함수 오버플로: z={bad}")
    return _out(result, scalar)


def rgamma(z):
    """
    1/Γ(z) (정함수, 극점에서 0)

    Raises:
        GammaOverflowError: 결과가 표현 범위를 넘음
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))

    result = np.zeros_like(z)
    ok = ~is_nonpositive_integer(z)
    zr = z[ok]
    values = np.empty_like(zr)
    left = zr.real < 0.5
    with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
        values[~left] = 1.0 / _lanczos(zr[~left])
        zl = zr[left]
        values[left] = sinpi(zl) * _lanczos(1.0 - zl) / np.pi
    result[ok] = values

    if not np.all(np.isfinite(result)):
        raise GammaOverflowError(f"역감마 함수 오버플로: z={z[~np.isfinite(result)][0]}")
    return _out(result, scalar)


def richardson(coarse, fine, order=2):
    """
    Richardson 외삽

    Args:
        coarse: 간격 h 에서의 값
        fine: 간격 h/2 에서의 값
        order: 오차 차수 p (오차 ~ h^p)

    Returns:
        tuple: (외삽 값, 잔차 |fine - coarse|)
    """
    factor = 2.0 ** order
    coarse = np.asarray(coarse)
    fine = np.asarray(fine)
    return (factor * fine - coarse) / (factor - 1.0), np.abs(fine - coarse)


def _series(a, b, c, z, max_terms=None):
    """₂F₁ 직접 급수 (원소별 수렴 판정)"""
    max_terms = max_terms or NUMERIC_CONFIG["HYP_MAX_TERMS"]
    tol = NUMERIC_CONFIG["HYP_SERIES_TOL"]

    term = np.ones(a.shape, dtype=complex)
    total = np.ones(a.shape, dtype=complex)
    quiet = np.zeros(a.shape, dtype=int)
    for n in range(max_terms):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total = total + term
        small = np.abs(term) <= tol * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        if np.all(quiet >= 2):
            return total

    raise ConvergenceError(f"초기하 급수가 {max_terms}항 안에 수렴하지 않음 (z={z})")


def _gauss_sum(a, b, c):
    """z=1 에서의 Gauss 합 공식"""
    if np.any((c - a - b).real <= 0):
        raise ConvergenceError("z=1 에서 Re(c-a-b) ≤ 0 이므로 급수가 발산")
    return cgamma(c) * cgamma(c - a - b) * rgamma(c - a) * rgamma(c - b)


def _with_integer_offset(generic, a, b, c, z, gap_of):
    """
    정수 퇴화 원소는 a 를 ±h 로 이동해 평균한 뒤 Richardson 외삽
    """
    gap = gap_of(a, b, c)
    distance = np.abs(gap - np.round(gap.real))
    degenerate = distance < NUMERIC_CONFIG["HYP_INTEGER_GAP"]

    out = np.empty(a.shape, dtype=complex)
    if np.any(~degenerate):
        out[~degenerate] = generic(a[~degenerate], b[~degenerate], c[~degenerate], z)
    if np.any(degenerate):
        ad, bd, cd = a[degenerate], b[degenerate], c[degenerate]
        h = NUMERIC_CONFIG["HYP_OFFSET"]

        def symmetric(step):
            return 0.5 * (generic(ad + step, bd, cd, z) + generic(ad - step, bd, cd, z))

        value, _ = richardson(symmetric(h), symmetric(h / 2.0))
        out[degenerate] = value
    return out


def _inverse_connection_generic(a, b, c, z):
    """1/(1-z) 접속 공식 (b-a 가 정수가 아닌 경우)"""
    w = 1.0 / (1.0 - z)
    one_minus = 1.0 - z
    gc = cgamma(c)
    first = gc * cgamma(b - a) * rgamma(b) * rgamma(c - a) * one_minus ** (-a) \
        * _series(a, c - b, a - b + 1.0, w)
    second = gc * cgamma(a - b) * rgamma(a) * rgamma(c - b) * one_minus ** (-b) \
        * _series(b, c - a, b - a + 1.0, w)
    return first + second


def _reflection_connection_generic(a, b, c, z):
    """1-z 접속 공식 (c-a-b 가 정수가 아닌 경우)"""
    w = 1.0 - z
    gc = cgamma(c)
    first = gc * cgamma(c - a - b) * rgamma(c - a) * rgamma(c - b) \
        * _series(a, b, a + b - c + 1.0, w)
    second = w ** (c - a - b) * gc * cgamma(a + b - c) * rgamma(a) * rgamma(b) \
        * _series(c - a, c - b, c - a - b + 1.0, w)
    return first + second


def _hyp2f1_fixed_z(a, b, c, z):
    """고정된 z 에 대해 파라미터 배열 전체를 평가"""
    shape = a.shape
    a, b, c = a.ravel(), b.ravel(), c.ravel()

    if np.any(is_nonpositive_integer(c, gap=1e-12)):
        raise ParameterPoleError(f"₂F₁ 의 c 가 0 이하의 정수: c={c[is_nonpositive_integer(c, gap=1e-12)][0]}")

    if z == 0:
        return np.ones(shape, dtype=complex)

    radius = NUMERIC_CONFIG["HYP_DIRECT_RADIUS"]
    out = np.empty(a.shape, dtype=complex)

    terminating = is_nonpositive_integer(a) | is_nonpositive_integer(b)
    if np.any(terminating):
        out[terminating] = _series(a[terminating], b[terminating], c[terminating], z)

    rest = ~terminating
    if np.any(rest):
        ar, br, cr = a[rest], b[rest], c[rest]
        if abs(z) <= radius:
            value = _series(ar, br, cr, z)
        elif z == 1:
            value = _gauss_sum(ar, br, cr)
        elif abs(z / (z - 1.0)) <= radius:
            # Pfaff 변환
            value = (1.0 - z) ** (-ar) * _series(ar, cr - br, cr, z / (z - 1.0))
        elif abs(1.0 / (1.0 - z)) <= radius:
            value = _with_integer_offset(
                _inverse_connection_generic, ar, br, cr, z, lambda a_, b_, c_: b_ - a_
            )
        elif abs(1.0 - z) <= radius:
            value = _with_integer_offset(
                _reflection_connection_generic, ar, br, cr, z, lambda a_, b_, c_: c_ - a_ - b_
            )
        elif abs(z) < 1.0:
            value = _series(ar, br, cr, z)
        else:
            raise ConvergenceError(f"₂F₁ 평가 영역 밖: z={z}")
        out[rest] = value

    return out.reshape(shape)


def hyp2f1(a, b, c, z):
    """
    Gauss 초기하 함수 ₂F₁(a, b; c; z)

    |z| ≤ 0.6 은 직접 급수, 그 밖은 Pfaff 변환, 1/(1-z) 접속,
    1-z 접속, z=1 의 Gauss 합 순서로 영역을 선택합니다.
    정수 퇴화는 대칭 파라미터 오프셋과 Richardson 외삽으로 처리합니다.

    Args:
        a, b, c: 복소 파라미터 (서로 브로드캐스트 가능)
        z: 복소 인자 (스칼라 또는 같은 모양의 배열)

    Returns:
        ₂F₁ 값

    Raises:
        ParameterPoleError: c 가 0 이하의 정수
        ConvergenceError: 급수 비수렴 또는 지원 영역 밖
    """
    scalar = all(np.ndim(v) == 0 for v in (a, b, c, z))
    a, b, c = np.broadcast_arrays(
        np.asarray(a, dtype=complex), np.asarray(b, dtype=complex), np.asarray(c, dtype=complex)
    )
    z = np.asarray(z, dtype=complex)

    if z.ndim == 0:
        values = _hyp2f1_fixed_z(np.atleast_1d(a), np.atleast_1d(b), np.atleast_1d(c), complex(z))
        return _out(values.reshape(a.shape) if a.ndim else values, scalar)

    a, b, c, z = np.broadcast_arrays(a, b, c, z)
    out = np.empty(z.shape, dtype=complex)
    for value in np.unique(z):
        mask = z == value
        out[mask] = _hyp2f1_fixed_z(a[mask], b[mask], c[mask], complex(value))
    return _out(out, scalar)


def gamma_ratio(x, shift):
    """
    Γ(x) / Γ(x + shift)

    shift 가 음이 아닌 정수이면 Pochhammer 곱 1/(x)_shift 로 계산하여
    x 가 감마 극점에 있어도 유한한 값을 돌려줍니다.

    Raises:
        GammaPoleError: 비율 자체가 극점인 경우
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    n = int(round(shift))
    if abs(shift - n) < 1e-12 and n >= 0:
        product = np.ones_like(x)
        for k in range(n):
            product = product * (x + k)
        if np.any(product == 0):
            raise GammaPoleError(f"Γ(x)/Γ(x+{n}) 극점: x={x[product == 0][0].real:g}")
        return _out(1.0 / product, scalar)
    return _out(cgamma(x) * rgamma(x + shift), scalar)
