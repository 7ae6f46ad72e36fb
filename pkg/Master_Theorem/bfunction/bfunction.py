#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
정규화 함수 b(λ)

    b(λ)/(c(λ)c(-λ)) = (C_b/P(ρ)) P(λ) ∏_j 1/sin(π(λ_j - ρ_j)),   C_b = (i/2)^l
    b(λ) = K_b T(λ) ∏_j 1/sin(π(λ_j - ρ_j))

두 번째 식을 bT 형태, β 별 cot/tan 과 sin/cos 로 풀어 쓴 식을 명시 형태라고 부릅니다.
명시 형태의 부호 K′_b = ±K_b 는 기준점 한 곳에서 두 형태의 비로 정합니다.
"""

import logging
import threading

import numpy as np

from config.settings import NUMERIC_CONFIG
from numerics.special import sinpi, cospi
from plancherel.c_function import CFunction
from plancherel.factors import DensityFactors
from roots.root_system import SpectralPoint
from utils.errors import PoleProximityError, ConventionError

# 로거 설정
logger = logging.getLogger(__name__)

# 제거 가능 점 판정 간격
_REMOVABLE_GAP = 1e-6

# 상수 불일치 경고를 이미 낸 공간 이름
_reported = set()
_reported_lock = threading.Lock()


def _coords(point):
    if isinstance(point, SpectralPoint):
        return point.array
    return np.asarray(point, dtype=complex)


def _lattice_distance(x, offset=0.0):
    """x 와 offset + ℤ 사이의 복소 거리"""
    shifted = np.asarray(x, dtype=complex) - offset
    return np.abs(shifted - np.round(shifted.real))


class BFunction:
    """
    RootDatum 에 대한 b 함수

    Attributes:
        datum: RootDatum
        cfunction: CFunction
        factors: DensityFactors
        C_b: (i/2)^l
        K_b: b/(cc) 식과 일치하도록 유도한 상수
        K_b_printed: C_b c₀² ∏C_β / P(ρ) (인쇄된 식 그대로)
        K_b_prime: 부호를 정한 명시 형태 상수
        findings: 상수 불일치 등 발견 사항
    """

    def __init__(self, datum, cfunction=None, factors=None):
        self.datum = datum
        self.cfunction = cfunction or CFunction(datum)
        self.factors = factors or DensityFactors(datum)
        self.guard = NUMERIC_CONFIG["POLE_GUARD"]

        rank = datum.rank
        self.simple = datum.simple_star_positions
        simple_set = set(int(k) for k in self.simple)
        self.nonsimple = np.array([k for k in range(len(datum.star_roots)) if k not in simple_set], dtype=int)
        self.cases = [f.case for f in self.factors.factors]
        self.simple_cases = [self.cases[int(k)] for k in self.simple]

        prod_C = float(np.prod(self.factors.constants))
        c0_sq = self.cfunction.c0 ** 2
        self.C_b = (0.5j) ** rank
        self.P_rho = self.factors.p_rho
        self.K_b = self.C_b * c0_sq / (self.P_rho * prod_C)
        self.K_b_printed = self.C_b * c0_sq * prod_C / self.P_rho
        self.findings = []
        mismatch = self.K_b_printed / self.K_b
        if abs(mismatch - 1.0) > 1e-12:
            finding = {
                "space": datum.name,
                "kind": "K_b_constant",
                "derived": self.K_b,
                "printed": self.K_b_printed,
                "ratio": mismatch,
                "note": "인쇄된 K_b 는 유도값의 (∏C_β)² 배",
            }
            self.findings.append(finding)
            with _reported_lock:
                first = datum.name not in _reported
                _reported.add(datum.name)
            log = logger.warning if first else logger.debug
            log(
                f"{datum.name}: 인쇄된 K_b 와 유도한 K_b 가 다름 (비율 {mismatch.real:.6g}), 유도값 사용"
            )

        self.K_b_prime = self._resolve_sign()

    # ------------------------------------------------------------------
    def _reference_point(self):
        base = np.array([0.2371, 0.1618, 0.3090][:self.datum.rank])
        return base + 1j * np.array([0.713, 0.419, 0.577][:self.datum.rank])

    def _resolve_sign(self):
        """기준점에서 bT 와 명시 형태의 비로 K′_b 부호 결정"""
        reference = self._reference_point()
        ratio = complex(self._b_T(reference) / (self.K_b * self._explicit_unsigned(reference)))
        sign = float(np.round(ratio.real))
        if abs(abs(sign) - 1.0) > 0 or abs(ratio - sign) > 1e-10:
            raise ConventionError(f"{self.datum.name}: K′_b 부호 결정 실패 (비율 {ratio})")
        return sign * self.K_b

    # ------------------------------------------------------------------
    def pi_poly(self, point):
        """Π(λ) = ∏_β λ_β"""
        value = np.prod(self.datum.lambda_star(_coords(point)), axis=-1)
        return complex(value) if np.ndim(value) == 0 else value

    def gamma_threshold(self, delta):
        """ã 가 Schwartz 공간에 속하는 튜브 반경 γ"""
        limits = [delta]
        for f in self.factors.factors:
            if (f.half_mult // 2) % 2 == 0:
                limits.append(1.0 / f.rho_tilde)
            else:
                limits.append(1.0 / (2.0 * f.rho_tilde))
        return float(min(limits))

    # ------------------------------------------------------------------
    def pole_distance(self, point):
        """
        b 의 실제 극 초평면까지의 거리 (명시 형태 기준)

        단순근: (a)(b)(c) 는 λ_j ∈ ℤ, (d) 는 λ_j ∈ ℤ+1/2
        비단순근: (b)(c) 는 cot 극 λ_β ∈ ℤ, (d) 는 tan 극 λ_β ∈ ℤ+1/2
        """
        lam = self.datum.lambda_star(_coords(point))
        distance = np.full(lam.shape[:-1], np.inf)
        for j, k in enumerate(self.simple):
            offset = 0.5 if self.simple_cases[j] == "d" else 0.0
            distance = np.minimum(distance, _lattice_distance(lam[..., int(k)], offset))
        for k in self.nonsimple:
            case = self.cases[int(k)]
            if case in ("b", "c"):
                distance = np.minimum(distance, _lattice_distance(lam[..., int(k)]))
            elif case == "d":
                distance = np.minimum(distance, _lattice_distance(lam[..., int(k)], 0.5))
        return distance

    def is_pole(self, point):
        """b 의 극 초평면 위(가드 거리 안)인지 판정"""
        return self.pole_distance(point) < self.guard

    def _guard(self, distance, what):
        if np.any(distance < self.guard):
            raise PoleProximityError(
                f"{self.datum.name}: {what} 극 초평면까지 거리 {float(np.min(distance)):.2e} < {self.guard:.0e}",
                distance=float(np.min(distance)),
            )

    # ------------------------------------------------------------------
    def _b_T(self, coords):
        coords = np.asarray(coords, dtype=complex)
        value = self.K_b * np.asarray(self.factors.trig_product(coords))
        for j in range(self.datum.rank):
            value = value / sinpi(coords[..., j] - self.datum.rho_coords[j])
        return value

    def _explicit_unsigned(self, coords):
        lam = self.datum.lambda_star(np.asarray(coords, dtype=complex))
        value = np.ones(lam.shape[:-1], dtype=complex)
        for k in self.nonsimple:
            case = self.cases[int(k)]
            x = lam[..., int(k)]
            if case in ("b", "c"):
                value = value * cospi(x) / sinpi(x)
            elif case == "d":
                value = value * sinpi(x) / cospi(x)
        for j, k in enumerate(self.simple):
            x = lam[..., int(k)]
            value = value / (cospi(x) if self.simple_cases[j] == "d" else sinpi(x))
        return value

    def b_explicit(self, point):
        """
        명시 형태 b(λ) = K′_b ∏cot ∏tan ∏1/sin ∏1/cos

        Raises:
            PoleProximityError: 극 초평면 근접
        """
        coords = _coords(point)
        self._guard(self.pole_distance(coords), "b")
        value = self.K_b_prime * self._explicit_unsigned(coords)
        return complex(value) if np.ndim(value) == 0 else value

    def b_eval(self, point):
        """
        b(λ) = K_b T(λ) ∏_j 1/sin(π(λ_j - ρ_j))

        λ_j - ρ_j 가 정수에 가까우면 (0/0 제거 가능 점) 명시 형태로 계산합니다.

        Raises:
            PoleProximityError: 실제 극 초평면까지 거리 < 1e-8
        """
        coords = _coords(point)
        self._guard(self.pole_distance(coords), "b")
        near = np.zeros(coords.shape[:-1], dtype=bool)
        for j in range(self.datum.rank):
            near |= _lattice_distance(coords[..., j], self.datum.rho_coords[j]) < _REMOVABLE_GAP

        with np.errstate(divide='ignore', invalid='ignore'):
            value = np.where(near, self.K_b_prime * self._explicit_unsigned(coords), self._b_T(coords))
        return complex(value) if np.ndim(value) == 0 else value

    # ------------------------------------------------------------------
    def b_over_cc_pole_distance(self, point):
        """b/(cc) 의 극 ±λ_j - ρ_j ∈ ℤ⁺ 까지의 거리"""
        coords = _coords(point)
        distance = np.full(coords.shape[:-1], np.inf)
        for j in range(self.datum.rank):
            rho = self.datum.rho_coords[j]
            for sign in (1.0, -1.0):
                x = sign * coords[..., j] - rho
                n = np.maximum(np.round(x.real), 0.0)
                distance = np.minimum(distance, np.abs(x - n))
        return distance

    def _simple_ratio(self, j, lam):
        """p_(β_j)(λ_j) / sin(π(λ_j - ρ_j)), 약분되는 0/0 은 해석적으로 처리"""
        factor = self.factors.factors[int(self.simple[j])]
        rho = self.datum.rho_coords[j]
        x = lam - rho
        n = np.round(x.real)
        near = np.abs(x - n) < _REMOVABLE_GAP
        with np.errstate(divide='ignore', invalid='ignore'):
            value = factor.p(lam) / sinpi(x)
        if not np.any(near):
            return value

        roots = np.asarray(factor.roots)
        for index in zip(*np.nonzero(near)):
            r = rho + n[index]
            hits = np.nonzero(np.abs(roots - r) < 1e-9)[0]
            if hits.size == 0:
                continue
            rest = np.delete(roots, hits[0])
            z = lam[index]
            # (λ-r)/sin(π(λ-ρ)) = (-1)^n / (π sinc(λ-r))
            sign = -1.0 if int(n[index]) % 2 else 1.0
            value[index] = np.prod(z - rest) * sign / (np.pi * np.sinc(z - r))
        return value

    def b_over_cc(self, point):
        """
        b(λ)/(c(λ)c(-λ)) = (C_b/P(ρ)) P(λ) ∏_j 1/sin(π(λ_j - ρ_j))

        Raises:
            PoleProximityError: ±λ_j - ρ_j ∈ ℤ⁺ 근접
        """
        coords = _coords(point)
        scalar = coords.ndim == 1
        coords = np.atleast_2d(coords)
        self._guard(self.b_over_cc_pole_distance(coords), "b/(cc)")

        lam = self.datum.lambda_star(coords)
        value = np.full(coords.shape[:-1], self.C_b / self.P_rho, dtype=complex)
        for k in self.nonsimple:
            value = value * self.factors.factors[int(k)].p(lam[..., int(k)])
        for j, k in enumerate(self.simple):
            value = value * self._simple_ratio(j, lam[..., int(k)])
        return complex(value[0]) if scalar else value

    def b_via_density(self, point):
        """검증용: b/(cc) 에 감마 경로 c(λ)c(-λ) 를 곱한 b"""
        coords = _coords(point)
        return self.b_over_cc(coords) / self.cfunction.density(coords)
