#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Hardy 클래스 H(A, P, δ)

인증서 (A, P, δ, C) 를 함께 가지고 다니는 함수 λ ↦ a(λ) 와
|a(λ)| ≤ C ∏_j e^{-P Re λ_j + A |Im λ_j|} 를 표본으로 확인하는 검사를 제공합니다.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from config.settings import SAMPLING_CONFIG
from roots.root_system import SpectralPoint
from utils.errors import CertificateError

# 로거 설정
logger = logging.getLogger(__name__)

# 위반 판정 여유
VIOLATION_SLACK = 1e-12


@dataclass(frozen=True)
class HardyCertificate:
    """Hardy 클래스 상수"""
    A: float
    P: float
    delta: float
    C: float

    def validate(self):
        """
        Raises:
            CertificateError: A ≥ π, P ≤ 0, δ ∉ (0,1], C ≤ 0
        """
        if not self.A < np.pi:
            raise CertificateError(f"A 는 π 보다 작아야 합니다: A={self.A}")
        if not self.P > 0:
            raise CertificateError(f"P 는 양수여야 합니다: P={self.P}")
        if not 0.0 < self.delta <= 1.0:
            raise CertificateError(f"δ 는 (0, 1] 범위여야 합니다: δ={self.delta}")
        if not self.C > 0:
            raise CertificateError(f"C 는 양수여야 합니다: C={self.C}")
        return self

    def majorant(self, coords):
        """C ∏_j e^{-P Re λ_j + A |Im λ_j|}"""
        coords = np.asarray(coords, dtype=complex)
        exponent = np.sum(-self.P * coords.real + self.A * np.abs(coords.imag), axis=-1)
        return self.C * np.exp(exponent)


@dataclass(frozen=True)
class HardyFunction:
    """
    인증서가 붙은 Hardy 클래스 함수

    Attributes:
        evaluator: (..., rank) 복소 배열 -> (...) 복소 배열
        certificate: HardyCertificate (없으면 검증 하네스에 들어갈 수 없음)
        rank: 변수 개수
        name: 표시 이름
        factors: 곱 함수의 성분 (환원 공간용)
    """
    evaluator: object
    certificate: HardyCertificate
    rank: int = 1
    name: str = "a"
    factors: tuple = field(default=())

    def _coords(self, point):
        if isinstance(point, SpectralPoint):
            return point.array
        coords = np.asarray(point, dtype=complex)
        if self.rank == 1 and coords.shape[-1:] != (1,):
            coords = coords[..., None]
        return coords

    def __call__(self, point):
        values = np.asarray(self.evaluator(self._coords(point)), dtype=complex)
        return complex(values) if values.ndim == 0 else values

    def require_certified(self):
        """
        검증 하네스 진입 전 인증서 확인

        Raises:
            CertificateError: 인증서 없음 또는 범위 위반
        """
        if self.certificate is None:
            raise CertificateError(f"인증서가 없는 Hardy 함수는 사용할 수 없습니다: {self.name}")
        self.certificate.validate()
        return self

    def describe(self):
        cert = self.certificate
        return {
            "name": self.name,
            "rank": self.rank,
            "A": cert.A if cert else None,
            "P": cert.P if cert else None,
            "delta": cert.delta if cert else None,
            "C": cert.C if cert else None,
        }


@dataclass
class CertificateReport:
    """check_certificate 결과"""
    name: str
    samples: int
    max_ratio: float
    violations: int
    worst_point: tuple

    @property
    def passed(self):
        return self.violations == 0


def sample_hardy_domain(rank, delta, n_samples, seed, rho=None, star_coeffs=None, rho_tilde=None):
    """
    H(δ) 의 결정적 표본

    실수부는 (-δρ_j, 4], 허수부는 [-10, 10] 에서 뽑고,
    star_coeffs 가 주어지면 Re λ_β > -δρ̃_β 를 만족하지 않는 점은 다시 뽑습니다.
    """
    rng = np.random.default_rng(seed)
    rho = np.ones(rank) if rho is None else np.asarray(rho, dtype=float)
    lower = -delta * rho
    points = []
    while len(points) < n_samples:
        batch = max(16, 2 * (n_samples - len(points)))
        # (lower, 4] 구간: 1 - U 는 (0, 1]
        real = lower + (4.0 - lower) * (1.0 - rng.random((batch, rank)))
        imag = rng.uniform(-10.0, 10.0, size=(batch, rank))
        candidate = real + 1j * imag
        if star_coeffs is not None:
            inside = np.all(real @ np.asarray(star_coeffs).T > -delta * np.asarray(rho_tilde), axis=1)
            candidate = candidate[inside]
        points.extend(candidate.tolist())
    return np.asarray(points[:n_samples], dtype=complex)


def check_certificate(a, n_samples=None, seed=None, datum=None):
    """
    Hardy 인증서 표본 검사

    Args:
        a: HardyFunction
        n_samples: 표본 수 (1 이상)
        seed: 난수 시드
        datum: RootDatum (None 이면 고전적 경우 ρ̃ = 1)

    Returns:
        CertificateReport

    Raises:
        CertificateError: 인증서 없음, 표본 수 오류, 영역 안에서 평가 실패
    """
    n_samples = SAMPLING_CONFIG["CERTIFICATE_SAMPLES"] if n_samples is None else n_samples
    seed = SAMPLING_CONFIG["SEED"] if seed is None else seed
    if n_samples < 1:
        raise CertificateError(f"표본 수는 1 이상이어야 합니다: {n_samples}")
    if a.certificate is None:
        raise CertificateError(f"인증서가 없는 Hardy 함수: {a.name}")
    cert = a.certificate

    if datum is not None:
        points = sample_hardy_domain(
            a.rank, cert.delta, n_samples, seed,
            rho=datum.rho_coords, star_coeffs=datum.star_coeffs, rho_tilde=datum.rho_tilde
        )
    else:
        points = sample_hardy_domain(a.rank, cert.delta, n_samples, seed)

    with np.errstate(over='ignore', invalid='ignore'):
        values = np.abs(a(points))
    if not np.all(np.isfinite(values)):
        bad = points[~np.isfinite(values)][0]
        raise CertificateError(f"{a.name}: H(δ) 안의 점에서 평가 실패 (λ={bad.tolist()})")

    ratios = values / cert.majorant(points)
    worst = int(np.argmax(ratios))
    report = CertificateReport(
        name=a.name,
        samples=n_samples,
        max_ratio=float(ratios[worst]),
        violations=int(np.sum(ratios > 1.0 + VIOLATION_SLACK)),
        worst_point=tuple(complex(v) for v in points[worst]),
    )
    if report.violations:
        logger.warning(f"{a.name}: 인증서 위반 {report.violations}건 (최대 비율 {report.max_ratio:.3e})")
    else:
        logger.debug(f"{a.name}: 인증서 검사 통과 (최대 비율 {report.max_ratio:.6f})")
    return report
