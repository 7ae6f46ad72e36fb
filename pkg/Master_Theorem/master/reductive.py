#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
환원 공간: v 차원 토러스 × 반단순 공간

    λ = λ⁰ + λ′ = Σ_k λ_k ε_k + Σ_j λ_j ω_j,   Λ⁺⁺ = ℤ⁺^v ⊕ Λ⁺
    b(λ) = b⁰(λ⁰) b′(λ′),   b⁰(λ⁰) = (i/2)^v ∏ 1/sin(πλ⁰_k)
    d(μ⁰ + μ′) = d(μ′),     ψ_{μ⁰}(x) = x^{μ⁰}

W 는 λ⁰ 에 자명하게 작용하므로 ã(λ) = b⁰(λ⁰) Σ_w a(λ⁰ + wλ′) b′(wλ′) 입니다.
토러스 쪽 기저점 σ⁰ 는 고전 정리와 같이 (-δ, 0) 에서 잡습니다.
"""

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from bfunction.symmetrize import a_tilde
from config.settings import SERIES_CONFIG, TOLERANCE_CONFIG
from hardy.hardy import HardyFunction
from numerics.quadrature import QuadratureConfig, line_integral, choose_halfwidth
from numerics.special import sinpi
from master.classical import classical_series, classical_contour, classical_interpolate
from master.contour import check_base_point, contour_f
from master.report import VerificationReport, make_record
from master.series import SeriesConfig, as_radial, truncation_height, series_f
from master.space import as_space
from utils.errors import (
    DomainViolationError, RadiusError, TruncationCertificateError, UsageError, ContinuationDomainError
)

# 로거 설정
logger = logging.getLogger(__name__)

# 토러스 보간 상수 κ⁰ = 1/(2πi)
TORUS_KAPPA = 1.0 / (2j * np.pi)
# 결합 윤곽 패널 폭
_JOINT_PANEL = 1.0


@dataclass
class ReductiveSpace:
    """
    토러스 계수 v 와 반단순 공간의 곱

    Attributes:
        torus_rank: v
        semisimple: SpaceContext
        lattice_basis: ε_k (v × v, 기본값 단위 행렬)
    """
    torus_rank: int
    semisimple: object
    lattice_basis: np.ndarray = None

    def __post_init__(self):
        if self.torus_rank < 1:
            raise UsageError(f"토러스 계수는 1 이상이어야 합니다: {self.torus_rank}")
        self.semisimple = as_space(self.semisimple)
        if self.lattice_basis is None:
            self.lattice_basis = np.eye(self.torus_rank)

    @property
    def name(self):
        return f"T{self.torus_rank}x{self.semisimple.name}"

    @property
    def rank(self):
        return self.torus_rank + self.semisimple.rank

    @property
    def rho(self):
        """토러스 쪽 ρ 는 0"""
        return np.concatenate([np.zeros(self.torus_rank), self.semisimple.datum.rho_coords])

    def split(self, coords):
        """(λ⁰, λ′)"""
        coords = np.asarray(coords, dtype=complex)
        return coords[..., :self.torus_rank], coords[..., self.torus_rank:]

    def b0(self, torus):
        """b⁰(λ⁰) = (i/2)^v ∏ 1/sin(πλ⁰_k)"""
        torus = np.asarray(torus, dtype=complex)
        return (0.5j) ** self.torus_rank / np.prod(sinpi(torus), axis=-1)

    def b(self, coords):
        torus, semi = self.split(coords)
        return self.b0(torus) * self.semisimple.bfunction.b_eval(semi)

    def weight_table(self, torus_height, max_height):
        """
        Λ⁺⁺ 의 (μ⁰ + μ′, d(μ), |μ|), μ⁰_k < torus_height, |μ′| ≤ max_height

        Returns:
            tuple: (μ 배열 (n, v+l), d 배열, 높이 배열)
        """
        mus, dims, heights = self.semisimple.weight_table(max_height)
        rows, row_dims, row_heights = [], [], []
        for torus in itertools.product(range(torus_height), repeat=self.torus_rank):
            for mu, d, h in zip(mus, dims, heights):
                rows.append(np.concatenate([np.array(torus, dtype=float), mu]))
                row_dims.append(d)
                row_heights.append(h + sum(torus))
        return np.array(rows), np.array(row_dims), np.array(row_heights, dtype=int)

    def psi_torus(self, mu0, x):
        """ψ_{μ⁰}(x) = ∏ x_k^{μ⁰_k}"""
        return np.prod(np.asarray(x, dtype=float) ** np.asarray(mu0, dtype=float), axis=-1)

    def describe(self):
        return {
            "name": self.name,
            "torus_rank": self.torus_rank,
            "semisimple": self.semisimple.name,
            "rank": self.rank,
            "rho": self.rho.tolist(),
        }


def reductive_space(torus_rank, semisimple):
    """ReductiveSpace 편의 생성자"""
    return ReductiveSpace(torus_rank=int(torus_rank), semisimple=semisimple)


def _require_rank(rspace, a):
    a.require_certified()
    if a.rank != rspace.rank:
        raise UsageError(f"{rspace.name}: Hardy 함수 변수 수 {a.rank} ≠ 계수 {rspace.rank}")


def _torus_terms(a, x, tolerance):
    """C q^n / (1-q) < tolerance 인 최소 n, q = max x_k e^{-P}"""
    cert = a.certificate
    q = float(np.max(x)) * np.exp(-cert.P)
    if not 0.0 < q < 1.0:
        raise RadiusError(f"x={np.asarray(x).tolist()} 는 토러스 수렴 반경 (0, e^P) 밖입니다")
    for n in range(1, 10 * SERIES_CONFIG["MAX_HEIGHT"] + 1):
        if cert.C * q ** n / (1.0 - q) < tolerance:
            return n
    raise TruncationCertificateError(f"토러스 급수 꼬리 상한 {tolerance:.1e} 불만족 (q={q:.4f})")


def reductive_series(rspace, a, x, H, cfg=None):
    """
    Λ⁺⁺ 위의 급수 Σ (-1)^{|μ|} d(μ′) a(μ⁰ + μ′ + ρ) x^{μ⁰} φ_{μ′+ρ}(exp H)

    Raises:
        RadiusError, TruncationCertificateError, ContinuationDomainError
    """
    _require_rank(rspace, a)
    cfg = cfg or SeriesConfig()
    semi = rspace.semisimple
    evaluator = semi.require_evaluator()
    radial = as_radial(H)
    if not radial.in_closed_omega_pi(semi.datum):
        raise ContinuationDomainError(f"{rspace.name}: Im H={radial} 가 Ω̄_π 밖입니다")
    x = np.atleast_1d(np.asarray(x, dtype=float))

    share = cfg.tolerance / (rspace.torus_rank + 1)
    torus_height = _torus_terms(a, x, share)
    height, _ = truncation_height(semi, a, radial.norm(semi.datum), SeriesConfig(share, cfg.max_height))
    mus, dims, heights = rspace.weight_table(torus_height, height)

    lam = mus + rspace.rho
    torus, semi_lam = rspace.split(lam)
    phi = evaluator.phi(semi_lam.real + 0j, radial)
    terms = (-1.0) ** heights * dims * a(lam) * rspace.psi_torus(torus.real, x) * phi
    logger.debug(f"{rspace.name} 급수: 토러스 {torus_height}항, 반단순 높이 {height}, 총 {len(mus)}항")
    return complex(np.sum(terms))


def reductive_integrand(rspace, a, x, H):
    """
    b⁰(λ⁰) x^{λ⁰} (1/|W|) Σ_w a(λ⁰ + wλ′) (b′/cc)(wλ′) φ_{λ′}(exp H)
    """
    semi = rspace.semisimple
    datum = semi.datum
    evaluator = semi.require_evaluator()
    radial = as_radial(H)
    log_x = np.log(np.atleast_1d(np.asarray(x, dtype=float)))

    def integrand(points):
        points = np.asarray(points, dtype=complex)
        torus, semi_lam = rspace.split(points)
        total = np.zeros(points.shape[:-1], dtype=complex)
        for image in datum.orbit_coords(semi_lam):
            joint = np.concatenate([torus, image], axis=-1)
            total = total + a(joint) * semi.bfunction.b_over_cc(image)
        power = np.exp(torus @ log_x)
        return rspace.b0(torus) * power * total / datum.weyl_order * evaluator.phi(semi_lam, radial)

    return integrand


def reductive_contour(rspace, a, x, H, sigma0=None, sigma=None, cfg=None):
    """
    (v+l) 차원 결합 윤곽 적분

    Args:
        sigma0: 토러스 기저점 (각 좌표 ∈ (-δ, 0), 기본값 -δ/2)
        sigma: 반단순 기저점 (B(T_δ), 기본값 0)

    Raises:
        DomainViolationError: 기저점이 영역 밖
        DecayCertificateError: 절단 경계 감쇠 검사 실패
    """
    _require_rank(rspace, a)
    cert = a.certificate
    v = rspace.torus_rank
    sigma0 = np.full(v, -0.5 * cert.delta) if sigma0 is None else np.atleast_1d(np.asarray(sigma0, dtype=float))
    if np.any(sigma0 <= -cert.delta) or np.any(sigma0 >= 0.0):
        raise DomainViolationError(f"{rspace.name}: σ⁰={sigma0.tolist()} 는 (-δ, 0) 밖입니다")
    semi = rspace.semisimple
    sigma = check_base_point(semi, np.zeros(semi.rank) if sigma is None else sigma, cert.delta)
    base = np.concatenate([sigma0, sigma])

    integrand = reductive_integrand(rspace, a, x, H)
    if cfg is None:
        start = QuadratureConfig(panel_width=_JOINT_PANEL)
        halfwidth = choose_halfwidth(integrand, base, np.pi - cert.A, semi.datum.degree_m, start)
        cfg = start.with_halfwidth(max(halfwidth, start.truncation_halfwidth))
    value = line_integral(integrand, base, cfg)
    logger.debug(f"{rspace.name} 결합 윤곽: σ={base.tolist()}, L={cfg.truncation_halfwidth}, 값 {value:.12g}")
    return complex(value)


def reductive_a_tilde(rspace, a, coords):
    """ã(λ) = b⁰(λ⁰) Σ_w a(λ⁰ + wλ′) b′(wλ′) (W 특이점은 반단순 쪽 외삽)"""
    coords = np.asarray(coords, dtype=complex)
    torus, semi_lam = rspace.split(coords)

    def sliced(points):
        points = np.asarray(points, dtype=complex)
        fixed = np.broadcast_to(torus, points.shape[:-1] + torus.shape)
        return a(np.concatenate([fixed, points], axis=-1))

    slice_a = HardyFunction(
        evaluator=sliced, certificate=a.certificate,
        rank=rspace.semisimple.rank, name=f"{a.name}|λ⁰",
    )
    return complex(rspace.b0(torus) * a_tilde(rspace.semisimple.bfunction, slice_a, semi_lam))


@dataclass
class ReductivePoints:
    """reductive_verify 검사 점"""
    x: list = field(default_factory=lambda: [[0.5], [1.0]])
    H: list = field(default_factory=lambda: [[0.0], [0.4]])
    spectral: list = field(default_factory=lambda: [[0.3, 0.2 + 0.5j], [0.6 - 0.2j, 0.1j]])


def reductive_verify(rspace, a, points=None, cfg=None):
    """
    환원 공간 급수, 결합 윤곽, 보간 우변 검사

    a 가 곱 함수 (a.factors = 토러스 성분 v 개 + 반단순 성분) 이면
    양변이 (토러스 고전 결과) × (반단순 결과) 로 인수분해되는지도 확인합니다.

    Returns:
        VerificationReport

    Raises:
        CertificateError: 인증서 없음
        UsageError: 변수 수 불일치
    """
    _require_rank(rspace, a)
    points = points or ReductivePoints()
    semi = rspace.semisimple
    v = rspace.torus_rank
    tol = TOLERANCE_CONFIG["REDUCTIVE"]
    report = VerificationReport(space=rspace.name, hardy=a.describe())
    factors = a.factors if len(a.factors) == v + 1 else None
    if factors is None:
        report.findings.append({"note": "곱 함수가 아니므로 인수분해 검사를 생략합니다", "hardy": a.name})

    # d(μ⁰ + μ′) = d(μ′)
    mus, dims, _ = rspace.weight_table(3, 3)
    exact = all(d == semi.dimension.weyl_dim(tuple(int(c) for c in mu[v:])) for mu, d in zip(mus, dims))
    report.add(make_record("reductive.dimension", "|μ⁰|,|μ′|≤3", float(exact), 1.0, 0.0, metric="abs"))

    for x, h in zip(points.x, points.H):
        label = f"x={x}, H={h}"
        series = reductive_series(rspace, a, x, h, cfg)
        contour = reductive_contour(rspace, a, x, h)
        report.add(make_record("reductive.series_contour", label, series, contour,
                               TOLERANCE_CONFIG["SERIES_CONTOUR"]))
        if factors:
            torus_series = np.prod([classical_series(f, xk) for f, xk in zip(factors[:v], x)])
            torus_contour = np.prod([classical_contour(f, xk, -0.5 * f.certificate.delta) for f, xk in zip(factors[:v], x)])
            report.add(make_record("reductive.series_factor", label, series,
                                   torus_series * series_f(semi, factors[v], h, cfg).value, tol))
            report.add(make_record("reductive.contour_factor", label, contour,
                                   torus_contour * contour_f(semi, factors[v], h).value, tol))

    for coords in points.spectral:
        coords = np.asarray(coords, dtype=complex)
        label = f"λ={[complex(c) for c in coords]}"
        joint = reductive_a_tilde(rspace, a, coords)
        if factors:
            torus_lhs = np.prod([classical_interpolate(f, coords[k]).lhs for k, f in enumerate(factors[:v])])
            semi_tilde = a_tilde(semi.bfunction, factors[v], coords[v:])
            expected = TORUS_KAPPA ** v * torus_lhs * semi_tilde
            report.add(make_record("reductive.interpolation_factor", label, joint / expected, 1.0, tol, metric="abs"))
        else:
            expected = complex(np.sum(
                a(np.concatenate([np.broadcast_to(coords[:v], (semi.datum.weyl_order, v)),
                                  semi.datum.orbit_coords(coords[v:])], axis=-1))
                * semi.bfunction.b_eval(semi.datum.orbit_coords(coords[v:]))
            ) * rspace.b0(coords[:v]))
            report.add(make_record("reductive.a_tilde", label, joint, expected, tol))

    report.truncation["torus_rank"] = v
    report.truncation["semisimple"] = semi.name
    logger.info(f"{rspace.name} [{a.name}]: 환원 공간 검사 {report.summary()}")
    return report
