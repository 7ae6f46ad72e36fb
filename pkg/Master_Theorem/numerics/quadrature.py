#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
구적법 및 유수 계산

수직선 σ + iℝ^l 위의 반복 복합 Gauss-Legendre 적분,
원 위의 사다리꼴 규칙을 이용한 (중첩) 유수 계산을 제공합니다.
"""

import logging
import itertools
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from config.settings import QUAD_CONFIG
from utils.errors import (
    QuadratureConfigError, DecayCertificateError, ConvergenceError, ResidueRadiusError, TailFitError
)

# 로거 설정
logger = logging.getLogger(__name__)

# 한 번에 평가할 최대 점 수
_CHUNK_POINTS = 250000


@dataclass(frozen=True)
class QuadratureConfig:
    """
    수직선 적분 설정

    Attributes:
        truncation_halfwidth: 축별 절단 반폭 L (Im λ_j 단위)
        nodes_per_axis: 패널당 Gauss-Legendre 노드 수 (16 이상)
        tail_bound_target: 절단 경계에서 허용하는 |f| 상한
        panel_width: 복합 규칙의 패널 최대 폭
    """
    truncation_halfwidth: float = QUAD_CONFIG["TRUNCATION_HALFWIDTH"]
    nodes_per_axis: int = QUAD_CONFIG["NODES_PER_AXIS"]
    tail_bound_target: float = QUAD_CONFIG["TAIL_BOUND_TARGET"]
    panel_width: float = QUAD_CONFIG["PANEL_WIDTH"]

    def __post_init__(self):
        if not self.truncation_halfwidth > 0:
            raise QuadratureConfigError(f"절단 반폭은 양수여야 합니다: {self.truncation_halfwidth}")
        if int(self.nodes_per_axis) != self.nodes_per_axis or self.nodes_per_axis < 16:
            raise QuadratureConfigError(f"노드 수는 16 이상의 정수여야 합니다: {self.nodes_per_axis}")
        if not self.tail_bound_target > 0:
            raise QuadratureConfigError(f"꼬리 상한 목표는 양수여야 합니다: {self.tail_bound_target}")
        if not self.panel_width > 0:
            raise QuadratureConfigError(f"패널 폭은 양수여야 합니다: {self.panel_width}")

    def with_halfwidth(self, halfwidth):
        """반폭만 바꾼 설정 반환"""
        return replace(self, truncation_halfwidth=float(halfwidth))


@lru_cache(maxsize=32)
def _gauss_legendre(n):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def composite_nodes(lower, upper, nodes_per_panel, panel_width):
    """
    [lower, upper] 구간의 복합 Gauss-Legendre 노드와 가중치

    Args:
        lower, upper: 구간 끝점
        nodes_per_panel: 패널당 노드 수
        panel_width: 패널 최대 폭

    Returns:
        tuple: (nodes, weights) 1차원 배열
    """
    panels = max(1, int(np.ceil((upper - lower) / panel_width - 1e-12)))
    edges = np.linspace(lower, upper, panels + 1)
    x, w = _gauss_legendre(int(nodes_per_panel))
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _boundary_points(sigma, halfwidth):
    """각 축의 면 |Im λ_j| = L 위 표본점"""
    rank = sigma.size
    offsets = (0.0, halfwidth / 3.0, -halfwidth / 3.0)
    points = []
    for axis in range(rank):
        for sign in (1.0, -1.0):
            others = [o for o in itertools.product(offsets, repeat=rank - 1)]
            for combo in others:
                imag = list(combo)
                imag.insert(axis, sign * halfwidth)
                points.append(sigma + 1j * np.asarray(imag))
    return np.asarray(points, dtype=complex)


def check_boundary_decay(f, sigma, cfg):
    """
    절단 경계에서 감쇠 인증서 검사

    Returns:
        float: 경계 표본의 최대 |f|

    Raises:
        DecayCertificateError: 최대값이 tail_bound_target 을 넘음
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    points = _boundary_points(sigma, cfg.truncation_halfwidth)
    worst = float(np.max(np.abs(f(points))))
    if not np.isfinite(worst) or worst > cfg.tail_bound_target:
        raise DecayCertificateError(
            f"|Im λ_j|={cfg.truncation_halfwidth:g} 에서 |f|={worst:.3e} 가 상한 "
            f"{cfg.tail_bound_target:.1e} 를 초과"
        )
    return worst


def choose_halfwidth(f, sigma, decay_rate, degree, cfg, max_halfwidth=None):
    """
    맞춤 상한 K(1+|y|)^M e^{-rate|y|} 로부터 절단 반폭 L 선택

    Args:
        f: 벡터화된 피적분 함수 (m, l) -> (m,)
        sigma: 기저점
        decay_rate: 지수 감쇠율 (π - A)
        degree: 다항 차수 M
        cfg: QuadratureConfig

    Returns:
        float: 선택된 L
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    max_halfwidth = max_halfwidth or QUAD_CONFIG["MAX_HALFWIDTH"]
    if decay_rate <= 0:
        raise DecayCertificateError(f"감쇠율이 양수가 아님: {decay_rate}")

    probe = np.linspace(0.5, 4.0, 8)
    ratio = 0.0
    for axis in range(sigma.size):
        for sign in (1.0, -1.0):
            points = np.tile(sigma.astype(complex), (probe.size, 1))
            points[:, axis] += 1j * sign * probe
            values = np.abs(f(points))
            ratio = max(ratio, float(np.max(values * np.exp(decay_rate * probe) / (1.0 + probe) ** degree)))

    # 맞춤 상수에 여유 10배, 목표에 여유 10배
    constant = 10.0 * max(ratio, 1e-300)
    target = 0.1 * cfg.tail_bound_target
    for halfwidth in np.arange(2.0, max_halfwidth + 1e-9, 0.5):
        if constant * (1.0 + halfwidth) ** degree * np.exp(-decay_rate * halfwidth) <= target:
            return float(halfwidth)
    raise DecayCertificateError(f"L ≤ {max_halfwidth} 안에서 꼬리 상한을 만족할 수 없음")


def line_integral(f, sigma, cfg, panel_width=None, check_decay=True):
    """
    σ + iℝ^l 위의 적분 ∫ f(λ) dλ₁⋯dλ_l

    dλ_j = i dy_j 이므로 결과에 i^l 이 곱해집니다.
    λ₁ 축이 가장 안쪽이고, 바깥 축은 인덱스 순서로 적분합니다.

    Args:
        f: 벡터화된 피적분 함수, (m, l) 복소 배열 -> (m,) 복소 배열
        sigma: 실수 기저점 (길이 l)
        cfg: QuadratureConfig
        panel_width: 패널 폭 (None 이면 cfg.panel_width)
        check_decay: 절단 경계 감쇠 검사 여부

    Returns:
        complex: 적분 값

    Raises:
        DecayCertificateError: 경계 감쇠 검사 실패
        ConvergenceError: 결과가 유한하지 않음
    """
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    rank = sigma.size
    width = min(cfg.panel_width, panel_width) if panel_width else cfg.panel_width
    halfwidth = cfg.truncation_halfwidth

    if check_decay:
        check_boundary_decay(f, sigma, cfg)

    y, w = composite_nodes(-halfwidth, halfwidth, cfg.nodes_per_axis, width)
    n = y.size

    if rank == 1:
        values = f((sigma[0] + 1j * y)[:, None])
        total = complex(np.sum(w * values))
    else:
        outer_index = np.array(list(itertools.product(range(n), repeat=rank - 1)), dtype=int)
        outer_weight = np.prod(w[outer_index], axis=1)
        chunk = max(1, _CHUNK_POINTS // n)
        total = 0.0 + 0.0j
        for start in range(0, len(outer_index), chunk):
            block = outer_index[start:start + chunk]
            points = np.empty((len(block), n, rank), dtype=complex)
            points[:, :, 0] = sigma[0] + 1j * y[None, :]
            for k in range(1, rank):
                points[:, :, k] = (sigma[k] + 1j * y[block[:, k - 1]])[:, None]
            values = f(points.reshape(-1, rank)).reshape(len(block), n)
            inner = values @ w
            total += complex(np.dot(outer_weight[start:start + chunk], inner))

    total *= 1j ** rank
    if not np.isfinite(total):
        raise ConvergenceError(f"선적분 결과가 유한하지 않음 (σ={sigma.tolist()})")
    return total


def _circle_sum(f, center, radius, nodes):
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    z = center + radius * np.exp(1j * theta)
    return complex(np.mean(f(z) * (z - center)))


def residue_at(f, z0, radius=None, nodes=None, second_radius=None, tol=1e-10):
    """
    원 위 사다리꼴 규칙으로 z0 에서의 유수 계산

    두 반지름의 결과가 다르면 원 안에 다른 극점이 있는 것으로 판단합니다.

    Raises:
        ResidueRadiusError: 두 반지름 결과 불일치
    """
    radius = radius or QUAD_CONFIG["RESIDUE_RADIUS"]
    nodes = max(64, nodes or QUAD_CONFIG["RESIDUE_NODES"])
    second_radius = second_radius or 0.6 * radius

    first = _circle_sum(f, complex(z0), radius, nodes)
    second = _circle_sum(f, complex(z0), second_radius, nodes)
    if abs(first - second) > tol * max(1.0, abs(first)):
        raise ResidueRadiusError(
            f"z0={complex(z0)} 에서 반지름 {radius:g}, {second_radius:g} 유수 불일치: "
            f"{first} vs {second}"
        )
    return first


def _nested_sum(f, centers, radius, nodes):
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    circle = radius * np.exp(1j * theta)
    rank = centers.size
    grids = np.meshgrid(*[centers[j] + circle for j in range(rank)], indexing='ij')
    points = np.stack([g.ravel() for g in grids], axis=1)
    weight = np.ones(points.shape[0], dtype=complex)
    for j in range(rank):
        weight *= (points[:, j] - centers[j]) / nodes
    return complex(np.sum(f(points) * weight))


def nested_residue(f, centers, radius=None, nodes=None, second_radius=None, tol=1e-10):
    """
    축별 원의 곱 위에서 반복 유수 Res_{λ₁} ⋯ Res_{λ_l} 계산

    Args:
        f: 벡터화된 함수 (m, l) -> (m,)
        centers: 축별 극점 위치

    Raises:
        ResidueRadiusError: 두 반지름 결과 불일치
    """
    centers = np.atleast_1d(np.asarray(centers, dtype=complex))
    radius = radius or QUAD_CONFIG["RESIDUE_RADIUS"]
    nodes = max(64, nodes or QUAD_CONFIG["RESIDUE_NODES"])
    second_radius = second_radius or 0.6 * radius

    first = _nested_sum(f, centers, radius, nodes)
    second = _nested_sum(f, centers, second_radius, nodes)
    if abs(first - second) > tol * max(1.0, abs(first)):
        raise ResidueRadiusError(
            f"중첩 유수 불일치 (중심 {centers.tolist()}): {first} vs {second}"
        )
    return first


def exponential_tail(u, values, negligible=1e-15, max_residual=0.05):
    """
    창 안의 표본 g(u) ~ c e^{κu} 적합으로 ∫_U^∞ g 추정 (U = u[-1])

    Returns:
        tuple: (꼬리 추정값, log|g| 적합 잔차)

    Raises:
        TailFitError: 감쇠하지 않거나 적합 잔차 과대
    """
    u = np.asarray(u, dtype=float)
    values = np.asarray(values, dtype=complex)
    magnitude = np.abs(values)
    if np.max(magnitude) < negligible:
        return 0.0j, float(np.max(magnitude))
    log_mag = np.log(np.maximum(magnitude, 1e-300))
    slope, intercept = np.polyfit(u, log_mag, 1)
    residual = float(np.max(np.abs(log_mag - (slope * u + intercept))))
    phase_slope = np.polyfit(u, np.unwrap(np.angle(values)), 1)[0]
    if slope >= 0 or residual > max_residual:
        raise TailFitError(f"꼬리 지수 적합 실패 (기울기 {slope:.3g}, 잔차 {residual:.3g})")
    return complex(-values[-1] / (slope + 1j * phase_slope)), residual
