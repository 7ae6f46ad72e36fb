#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
내장 Hardy 클래스 함수와 명령행 문자열 파서

지원 문자열:
    exp:P=1            e^{-P Σλ_j}
    rgamma:P=2,A=1.7   ∏ 1/Γ(λ_j+1)
    box:P=1,R=2        지시함수 1_[P,R]^l 의 Laplace 변환
    zero               a ≡ 0
    sine:A=3           sin(πλ₁) (반례, 위반이 보고되어야 함)
"""

import logging

import numpy as np

from numerics.special import rgamma, sinpi
from hardy.hardy import HardyFunction, HardyCertificate
from hardy.laplace import laplace_hardy, box_transform
from utils.errors import UsageError, CertificateError

# 로거 설정
logger = logging.getLogger(__name__)

# 1/Γ 상수 적합 격자
_FIT_REAL = (-1.0, 40.0, 411)
_FIT_IMAG = (-40.0, 40.0, 801)


def exp_decay(P=1.0, rank=1, delta=1.0):
    """a(λ) = e^{-P Σ λ_j}, 인증서 (A=0, P, δ, C=1)"""
    def evaluate(coords):
        return np.exp(-P * np.sum(coords, axis=-1))
    return HardyFunction(
        evaluator=evaluate,
        certificate=HardyCertificate(A=0.0, P=P, delta=delta, C=1.0).validate(),
        rank=rank,
        name=f"exp(P={P:g})",
    )


def reciprocal_gamma(P=2.0, A=1.7, rank=1, delta=1.0, rho_max=1.0):
    """
    a(λ) = ∏ 1/Γ(λ_j + 1)

    C 는 Re λ ∈ [-δρ, 40], Im λ ∈ [-40, 40] 격자 최대값의 1.05 배로 적합합니다.
    |1/Γ(x+iy)| ~ e^{π|y|/2} 이므로 A > π/2 가 필요합니다.
    """
    if not np.pi / 2 < A < np.pi:
        raise CertificateError(f"1/Γ 의 A 는 (π/2, π) 범위여야 합니다: A={A}")
    x = np.linspace(-delta * rho_max, _FIT_REAL[1], _FIT_REAL[2])
    y = np.linspace(*_FIT_IMAG)
    grid = x[:, None] + 1j * y[None, :]
    with np.errstate(under='ignore'):
        ratio = np.abs(rgamma(grid + 1.0)) * np.exp(P * grid.real - A * np.abs(grid.imag))
    constant_1d = 1.05 * float(np.max(ratio))

    def evaluate(coords):
        return np.prod(rgamma(np.asarray(coords, dtype=complex) + 1.0), axis=-1)

    return HardyFunction(
        evaluator=evaluate,
        certificate=HardyCertificate(A=A, P=P, delta=delta, C=constant_1d ** rank).validate(),
        rank=rank,
        name=f"rgamma(P={P:g},A={A:g})",
    )


def laplace_box(P=1.0, R=2.0, rank=1, delta=1.0, rho_max=1.0):
    """지시함수 1_[P,R]^l 의 Laplace 변환 (닫힌 형태 평가)"""
    return laplace_hardy(
        lambda x: np.ones(x.shape[0]), P, R, rank=rank, delta=delta, rho_max=rho_max,
        closed_form=box_transform(P, R), name=f"box[{P:g},{R:g}]",
    )


def zero_function(rank=1, P=1.0, delta=1.0):
    """a ≡ 0 (C 는 양수 하한 1e-300)"""
    def evaluate(coords):
        return np.zeros(np.asarray(coords).shape[:-1], dtype=complex)
    return HardyFunction(
        evaluator=evaluate,
        certificate=HardyCertificate(A=0.0, P=P, delta=delta, C=1e-300).validate(),
        rank=rank,
        name="zero",
    )


def sine_counterexample(A=3.0, P=1e-3, rank=1, delta=1.0):
    """
    a(λ) = sin(πλ₁) 에 A < π 인증서를 붙인 반례

    |sin(π(x+iy))| ~ e^{π|y|}/2 이므로 큰 |y| 에서 위반이 나와야 합니다.
    """
    def evaluate(coords):
        return sinpi(np.asarray(coords, dtype=complex)[..., 0])
    return HardyFunction(
        evaluator=evaluate,
        certificate=HardyCertificate(A=A, P=P, delta=delta, C=1.0).validate(),
        rank=rank,
        name=f"sine(A={A:g})",
    )


def product_hardy(torus_factors, semisimple):
    """
    환원 공간용 곱 함수 a(λ⁰ + λ′) = ∏_k a⁰_k(λ⁰_k) · a′(λ′)

    인증서는 A 최대, P 최소, δ 최소, C 곱으로 합칩니다.

    Args:
        torus_factors: 1변수 HardyFunction 목록 (v 개)
        semisimple: rank l HardyFunction
    """
    torus_factors = tuple(torus_factors)
    parts = torus_factors + (semisimple,)
    for part in parts:
        part.require_certified()
    v = len(torus_factors)

    def evaluate(coords):
        coords = np.asarray(coords, dtype=complex)
        value = semisimple(coords[..., v:])
        for k, factor in enumerate(torus_factors):
            value = value * factor(coords[..., k:k + 1])
        return value

    certificate = HardyCertificate(
        A=max(p.certificate.A for p in parts),
        P=min(p.certificate.P for p in parts),
        delta=min(p.certificate.delta for p in parts),
        C=float(np.prod([p.certificate.C for p in parts])),
    ).validate()
    return HardyFunction(
        evaluator=evaluate,
        certificate=certificate,
        rank=v + semisimple.rank,
        name=" ⊗ ".join(p.name for p in parts),
        factors=parts,
    )


_BUILTINS = {
    "exp": (exp_decay, {"P"}),
    "rgamma": (reciprocal_gamma, {"P", "A"}),
    "box": (laplace_box, {"P", "R"}),
    "zero": (zero_function, {"P"}),
    "sine": (sine_counterexample, {"A", "P"}),
}


def parse_hardy_spec(spec, rank=1, delta=1.0, rho_max=1.0):
    """
    명령행 Hardy 문자열 해석

    Args:
        spec (str): 예) 'exp:P=1', 'rgamma:P=2,A=1.7', 'box:P=1,R=2', 'zero'
        rank (int): 변수 개수

    Returns:
        HardyFunction

    Raises:
        UsageError: 알 수 없는 이름, 잘못된 파라미터
    """
    name, _, params = spec.strip().partition(":")
    if name not in _BUILTINS:
        raise UsageError(f"알 수 없는 Hardy 함수: {name} (사용 가능: {', '.join(_BUILTINS)})")
    factory, allowed = _BUILTINS[name]

    kwargs = {}
    for item in filter(None, (p.strip() for p in params.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key not in allowed:
            raise UsageError(f"{name} 의 파라미터 오류: '{item}' (허용: {sorted(allowed)})")
        try:
            kwargs[key] = float(value)
        except ValueError:
            raise UsageError(f"{name} 의 파라미터 값이 숫자가 아닙니다: '{item}'")

    extra = {"rank": rank, "delta": delta}
    if name in ("rgamma", "box"):
        extra["rho_max"] = rho_max
    try:
        return factory(**kwargs, **extra)
    except CertificateError as e:
        raise UsageError(f"Hardy 함수 '{spec}' 인증서 오류: {e}")
