#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
제한 근계와 중복도

표준 유클리드 실현(A, B, C, D, BC, G2)에서 양근, 단순근, ω 기저,
Weyl 군(ω 좌표 차트 행렬), ρ 관련 상수를 계산합니다.
스펙트럼 파라미터 λ 는 ω 좌표 (λ₁, …, λ_l) 로 저장합니다.
"""

import logging
import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from utils.errors import (
    MasterTheoremError, ParityViolationError, MultiplicityError,
    UnsupportedFamilyError, ZeroRootError, DomainViolationError
)

# 로거 설정
logger = logging.getLogger(__name__)

# 계열별 길이 클래스 (짧은 것부터)
FAMILY_CLASSES = {
    "A": ("root",),
    "D": ("root",),
    "B": ("short", "long"),
    "C": ("short", "long"),
    "G2": ("short", "long"),
    "BC": ("half", "middle", "double"),
}

_DEDUP_DECIMALS = 9


@dataclass(frozen=True)
class SpectralPoint:
    """ω 좌표로 표현한 λ ∈ 𝔞*_ℂ"""
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(complex(c) for c in self.coords))

    @property
    def rank(self):
        return len(self.coords)

    @property
    def array(self):
        return np.asarray(self.coords, dtype=complex)

    @classmethod
    def from_array(cls, values):
        return cls(tuple(np.atleast_1d(values).tolist()))

    def __str__(self):
        parts = ", ".join(f"{c.real:.6g}{c.imag:+.6g}j" for c in self.coords)
        return f"({parts})"


@dataclass(frozen=True)
class DominantWeight:
    """ω 기저의 음이 아닌 정수 좌표 μ ∈ Λ⁺"""
    coords: tuple

    def __post_init__(self):
        values = tuple(int(c) for c in self.coords)
        if any(c < 0 for c in values) or any(int(c) != c for c in self.coords):
            raise DomainViolationError(f"지배 가중치 좌표는 음이 아닌 정수여야 합니다: {self.coords}")
        object.__setattr__(self, "coords", values)

    @property
    def height(self):
        return sum(self.coords)

    @property
    def array(self):
        return np.asarray(self.coords, dtype=float)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RhoData:
    """ρ 및 노름 상수"""
    rho: SpectralPoint
    rho_j: tuple
    rho_tilde: tuple
    omega_max: float
    c1: float
    c2: float
    degree_m: int


def _unit(dim, i):
    v = np.zeros(dim)
    v[i] = 1.0
    return v


def _simple_roots(family, rank):
    """계열별 단순근과 추가 궤도 생성원 (BC 의 2α_n)"""
    if family == "A":
        if rank < 1:
            raise UnsupportedFamilyError(f"A 계열 계수는 1 이상이어야 합니다: {rank}")
        dim = rank + 1
        simple = [_unit(dim, i) - _unit(dim, i + 1) for i in range(rank)]
        return np.array(simple), []
    if family in ("B", "C", "BC"):
        minimum = 1 if family == "BC" else 2
        if rank < minimum:
            raise UnsupportedFamilyError(f"{family} 계열 계수는 {minimum} 이상이어야 합니다: {rank}")
        dim = rank
        simple = [_unit(dim, i) - _unit(dim, i + 1) for i in range(rank - 1)]
        last = _unit(dim, rank - 1)
        if family == "C":
            simple.append(2.0 * last)
            return np.array(simple), []
        simple.append(last)
        extra = [2.0 * last] if family == "BC" else []
        return np.array(simple), extra
    if family == "D":
        if rank < 3:
            raise UnsupportedFamilyError(f"D 계열 계수는 3 이상이어야 합니다: {rank}")
        dim = rank
        simple = [_unit(dim, i) - _unit(dim, i + 1) for i in range(rank - 1)]
        simple.append(_unit(dim, rank - 2) + _unit(dim, rank - 1))
        return np.array(simple), []
    if family == "G2":
        if rank != 2:
            raise UnsupportedFamilyError(f"G2 계열 계수는 2 입니다: {rank}")
        return np.array([[1.0, -1.0, 0.0], [-2.0, 1.0, 1.0]]), []
    raise UnsupportedFamilyError(f"지원하지 않는 근계 계열: {family}")


def _weyl_order(family, rank):
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C", "BC"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return 12


def _reflection(alpha):
    return np.eye(alpha.size) - 2.0 * np.outer(alpha, alpha) / np.dot(alpha, alpha)


def _key(array):
    # -0.0 과 0.0 을 같은 키로
    return (np.round(array, _DEDUP_DECIMALS) + 0.0).tobytes()


def _generate_weyl_group(simple):
    """단순 반사로부터 닫힘 연산으로 Weyl 군 생성"""
    generators = [_reflection(alpha) for alpha in simple]
    identity = np.eye(simple.shape[1])
    elements = [identity]
    seen = {_key(identity)}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for element in frontier:
            for s in generators:
                product = s @ element
                key = _key(product)
                if key not in seen:
                    seen.add(key)
                    elements.append(product)
                    new_frontier.append(product)
        frontier = new_frontier
    return elements


def _validate_multiplicities(family, rank, multiplicities):
    """중복도 검증 (홀짝 조건을 먼저 검사)"""
    half = multiplicities.get("half")
    if half is not None and (int(half) != half or int(half) % 2 != 0):
        raise ParityViolationError(f"m_(β/2) 는 짝수여야 합니다: half={half}")

    if family not in FAMILY_CLASSES:
        raise UnsupportedFamilyError(f"지원하지 않는 근계 계열: {family}")

    expected = set(FAMILY_CLASSES[family])
    if family == "BC" and rank == 1:
        expected.discard("middle")
    given = set(multiplicities)
    if given != expected:
        raise MultiplicityError(
            f"{family}{rank} 의 중복도 클래스는 {sorted(expected)} 이어야 합니다 (받은 값: {sorted(given)})"
        )
    for name, value in multiplicities.items():
        if int(value) != value or value < 1:
            raise MultiplicityError(f"중복도는 양의 정수여야 합니다: {name}={value}")

    if family == "BC" and int(multiplicities["double"]) % 2 == 0:
        raise ParityViolationError(
            f"m_(β/2) ≠ 0 이면 m_β 는 홀수여야 합니다: double={multiplicities['double']}"
        )
    return {name: int(value) for name, value in multiplicities.items()}


class RootDatum:
    """
    중복도가 주어진 제한 근계

    ambient 유클리드 공간의 벡터로 근을 저장하고, ω 좌표 차트에서
    Weyl 군을 행렬 R_w (좌표 행벡터에 오른쪽 곱) 로 보관합니다.
    생성 후에는 변경하지 않습니다.
    """

    def __init__(self, family, rank, multiplicities, name=None):
        self.multiplicities = _validate_multiplicities(family, rank, dict(multiplicities))
        self.family = family
        self.rank = int(rank)
        self.name = name or f"{family}{rank}"

        simple, extra = _simple_roots(family, self.rank)
        self.simple_roots = simple
        self.ambient_dim = simple.shape[1]

        # Weyl 군과 근 생성
        self.weyl_ambient = _generate_weyl_group(simple)
        expected_order = _weyl_order(family, self.rank)
        if len(self.weyl_ambient) != expected_order:
            raise MasterTheoremError(
                f"Weyl 군 크기 불일치: {len(self.weyl_ambient)} (기대값 {expected_order})"
            )

        regular = simple.T @ np.linalg.solve(simple @ simple.T, np.ones(self.rank))
        roots = {}
        for seed in list(simple) + list(extra):
            for w in self.weyl_ambient:
                image = w @ seed
                if np.dot(regular, image) > 0:
                    roots.setdefault(_key(image), image)
        positive = sorted(roots.values(), key=lambda v: (np.dot(v, v), -np.dot(regular, v)))
        self.roots = np.array(positive)

        # 길이 클래스와 중복도
        lengths = np.round(np.einsum('ij,ij->i', self.roots, self.roots), 9)
        distinct = sorted(set(lengths.tolist()))
        names = [c for c in FAMILY_CLASSES[family] if c in self.multiplicities]
        if len(distinct) != len(names):
            raise MultiplicityError(f"길이 클래스 수 불일치: {distinct} vs {names}")
        class_of = {length: names[i] for i, length in enumerate(distinct)}
        self.root_classes = [class_of[length] for length in lengths.tolist()]
        self.root_mult = np.array([self.multiplicities[c] for c in self.root_classes], dtype=int)

        root_keys = {_key(r): i for i, r in enumerate(self.roots)}

        # 곱할 수 없는 양근 Σ*⁺ 와 기저 Π*
        star = [i for i, r in enumerate(self.roots) if _key(2.0 * r) not in root_keys]
        self.star_index = np.array(star, dtype=int)
        self.star_roots = self.roots[self.star_index]
        self.star_mult = self.root_mult[self.star_index]
        self.star_half_mult = np.array([
            self.root_mult[root_keys[_key(0.5 * r)]] if _key(0.5 * r) in root_keys else 0
            for r in self.star_roots
        ], dtype=int)
        self.beta = np.array([
            2.0 * alpha if _key(2.0 * alpha) in root_keys else alpha for alpha in simple
        ])
        self.beta_norm2 = np.einsum('ij,ij->i', self.beta, self.beta)

        # ω 기저: (ω_j)_{β_k} = δ_jk
        gram = self.beta @ self.beta.T
        self.omega = np.diag(self.beta_norm2) @ np.linalg.solve(gram, self.beta)
        self.omega_gram = self.omega @ self.omega.T
        self._omega_gram_inv = np.linalg.inv(self.omega_gram)

        # λ_α = λ · root_coeffs[α], α(H) = h · root_in_omega[α]
        norms = np.einsum('ij,ij->i', self.roots, self.roots)
        self.root_coeffs = (self.omega @ self.roots.T / norms[None, :]).T
        self.star_coeffs = self.root_coeffs[self.star_index]
        self.root_in_omega = self.roots @ self.beta.T / self.beta_norm2[None, :]

        # Weyl 군의 ω 차트 행렬
        self.weyl_chart = np.array([
            self.omega @ w.T @ self.beta.T / self.beta_norm2[None, :] for w in self.weyl_ambient
        ])
        self.weyl_det = np.round(np.linalg.det(self.weyl_chart)).astype(int)
        longest = [i for i, w in enumerate(self.weyl_ambient) if np.allclose(w @ regular, -regular)]
        self.w0_index = longest[0]

        # ρ 데이터
        self.rho_ambient = 0.5 * np.sum(self.root_mult[:, None] * self.roots, axis=0)
        self.rho_coords = self.rho_ambient @ self.beta.T / self.beta_norm2
        self.rho_tilde = 0.5 * (self.star_mult + 0.5 * self.star_half_mult)
        self.rho_star = self.rho_ambient @ self.star_roots.T / np.einsum(
            'ij,ij->i', self.star_roots, self.star_roots
        )
        omega_norms = np.sqrt(np.diag(self.omega_gram))
        self.omega_max = float(np.max(omega_norms))
        self.c1 = 1.0 / self.omega_max
        self.c2 = float(np.sum(1.0 / np.sqrt(self.beta_norm2)))
        self.degree_m = int(np.sum(self.star_half_mult + self.star_mult))

        self._check_invariants()
        logger.debug(f"근계 생성: {self.name} (|Σ⁺|={len(self.roots)}, |W|={self.weyl_order})")

    def _check_invariants(self):
        duality = self.omega @ self.beta.T / self.beta_norm2[None, :]
        if np.max(np.abs(duality - np.eye(self.rank))) > 1e-12:
            raise MasterTheoremError(f"ω 기저 쌍대성 잔차 초과: {self.name}")
        if np.max(np.abs(self.rho_coords - self.rho_tilde[self._beta_star_positions()])) > 1e-12:
            raise MasterTheoremError(f"ρ_j ≠ ρ̃_(β_j): {self.name}")
        if np.max(np.abs(self.rho_coords @ self.weyl_chart[self.w0_index] + self.rho_coords)) > 1e-12:
            raise MasterTheoremError(f"w₀ρ ≠ -ρ: {self.name}")

    def _beta_star_positions(self):
        """Π* 의 각 β_j 가 Σ*⁺ 에서 차지하는 위치"""
        keys = {_key(r): i for i, r in enumerate(self.star_roots)}
        return np.array([keys[_key(b)] for b in self.beta], dtype=int)

    # ------------------------------------------------------------------
    @property
    def weyl_order(self):
        return len(self.weyl_ambient)

    @property
    def is_reduced(self):
        return self.family != "BC"

    @property
    def is_complex_case(self):
        """축약 근계이고 모든 중복도가 2 인 경우"""
        return self.is_reduced and bool(np.all(self.root_mult == 2))

    @property
    def simple_star_positions(self):
        return self._beta_star_positions()

    @property
    def rho(self):
        return RhoData(
            rho=SpectralPoint.from_array(self.rho_coords),
            rho_j=tuple(self.rho_coords.tolist()),
            rho_tilde=tuple(self.rho_tilde.tolist()),
            omega_max=self.omega_max,
            c1=self.c1,
            c2=self.c2,
            degree_m=self.degree_m,
        )

    # ------------------------------------------------------------------
    def to_ambient(self, coords):
        return np.asarray(coords) @ self.omega

    def from_ambient(self, vector):
        return np.asarray(vector) @ self.beta.T / self.beta_norm2

    def lambda_sub(self, point, alpha):
        """
        λ_α = ⟨λ, α⟩ / ⟨α, α⟩

        Args:
            point: SpectralPoint 또는 ω 좌표 배열
            alpha: ambient 벡터로 표현한 근

        Raises:
            ZeroRootError: α = 0
        """
        alpha = np.asarray(alpha, dtype=float)
        norm2 = float(np.dot(alpha, alpha))
        if norm2 == 0.0:
            raise ZeroRootError("영벡터에 대한 λ_α 는 정의되지 않습니다")
        coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
        value = self.to_ambient(coords) @ alpha / norm2
        return complex(value) if np.ndim(value) == 0 else value

    def lambda_star(self, coords):
        """Σ*⁺ 의 각 β 에 대한 λ_β, 모양 (..., |Σ*⁺|)"""
        return np.asarray(coords) @ self.star_coeffs.T

    def act(self, coords, index):
        """w·λ 의 ω 좌표"""
        return np.asarray(coords) @ self.weyl_chart[index]

    def orbit_coords(self, coords):
        """모든 w 에 대한 wλ, 모양 (|W|, ..., l)"""
        coords = np.asarray(coords)
        return np.einsum('...k,wkj->w...j', coords, self.weyl_chart)

    def weyl_orbit(self, point):
        """
        Weyl 궤도 {wλ} (1e-12 허용치로 중복 제거)

        Returns:
            list: SpectralPoint 목록
        """
        coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
        orbit = []
        for image in self.orbit_coords(coords):
            if all(np.max(np.abs(image - seen)) > 1e-12 for seen in orbit):
                orbit.append(image)
        return [SpectralPoint.from_array(v) for v in orbit]

    def dominant_weights(self, max_height):
        """
        높이 ≤ max_height 인 지배 가중치 (높이 순, 같은 높이에서는 역사전식)

        Returns:
            list: DominantWeight 목록
        """
        if max_height < 0:
            raise DomainViolationError(f"최대 높이는 0 이상이어야 합니다: {max_height}")
        weights = [
            mu for mu in itertools.product(range(max_height + 1), repeat=self.rank)
            if sum(mu) <= max_height
        ]
        weights.sort(key=lambda mu: (sum(mu), [-c for c in mu]))
        return [DominantWeight(mu) for mu in weights]

    def norm(self, coords):
        """실수 λ 의 노름 ‖λ‖"""
        coords = np.asarray(coords, dtype=float)
        return np.sqrt(np.einsum('...i,ij,...j->...', coords, self.omega_gram, coords))

    def radial_norm(self, h):
        """h = (ω_j(H)) 로 주어진 H 의 노름 ‖H‖"""
        h = np.asarray(h, dtype=float)
        return float(np.sqrt(h @ self._omega_gram_inv @ h))

    def root_values(self, h):
        """양근 α 에 대한 α(H), 모양 (|Σ⁺|,)"""
        return self.root_in_omega @ np.asarray(h)

    def describe(self):
        """카탈로그 출력용 요약"""
        return {
            "name": self.name,
            "family": self.family,
            "rank": self.rank,
            "multiplicities": dict(self.multiplicities),
            "rho": [round(float(v), 12) for v in self.rho_coords],
            "weyl_order": self.weyl_order,
            "positive_roots": len(self.roots),
            "unmultipliable_roots": len(self.star_roots),
            "complex_case": self.is_complex_case,
        }


def build_root_system(family, rank, multiplicities, name=None):
    """
    계열, 계수, 길이 클래스별 중복도로 RootDatum 생성

    Args:
        family (str): A, B, C, D, BC, G2
        rank (int): 계수
        multiplicities (dict): 길이 클래스 -> 중복도

    Returns:
        RootDatum

    Raises:
        ParityViolationError, MultiplicityError, UnsupportedFamilyError
    """
    return RootDatum(family, rank, multiplicities, name=name)


def multiplicity_case(half_mult, mult):
    """
    β ∈ Σ*⁺ 의 중복도 경우 분류

    Returns:
        str: 'a' (m_β 짝수), 'b' (m_(β/2)=0, m_β 홀수),
             'c' (m_(β/2)/2 짝수), 'd' (m_(β/2)/2 홀수)
    """
    if mult % 2 == 0:
        return "a"
    if half_mult == 0:
        return "b"
    return "c" if (half_mult // 2) % 2 == 0 else "d"
