#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
구면 함수 평가기

공간의 근계에 따라 complex-case, rank-one, oracle 세 가지 방식 중 하나로 φ_λ(exp H) 를 계산합니다.
생성 시 φ_ρ = 1 과 Weyl 불변성을 표본 점에서 확인합니다.
"""

import logging

import numpy as np

from config.settings import SAMPLING_CONFIG
from roots.root_system import SpectralPoint
from spherical.complex_case import ComplexCasePhi
from spherical.oracle import model_for, phi_oracle_rank1
from spherical.radial import RadialPoint
from spherical.rank_one import RankOnePhi
from utils.errors import ConventionError, UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)

COMPLEX_CASE = "complex-case"
RANK_ONE = "rank-one"
ORACLE = "oracle"
MODES = (COMPLEX_CASE, RANK_ONE, ORACLE)

# 자체 검사 허용치
SELF_CHECK_TOL = {COMPLEX_CASE: 1e-10, RANK_ONE: 1e-10, ORACLE: 1e-9}


def default_mode(datum):
    """계수 1 은 rank-one, 그 밖의 복소 경우는 complex-case"""
    if datum.rank == 1:
        return RANK_ONE
    if datum.is_complex_case:
        return COMPLEX_CASE
    raise UnsupportedSpaceError(
        f"{datum.name}: 닫힌 형태 구면 함수가 없습니다 (계수 ≥ 2 의 비복소 경우)"
    )


class SphericalEvaluator:
    """
    φ_λ(exp H) 평가기

    Attributes:
        datum: RootDatum
        mode: complex-case / rank-one / oracle
    """

    def __init__(self, datum, mode=None, self_check=True):
        self.datum = datum
        self.mode = mode or default_mode(datum)
        if self.mode not in MODES:
            raise UnsupportedSpaceError(f"알 수 없는 평가 방식: {self.mode}")

        if self.mode == COMPLEX_CASE:
            self._backend = ComplexCasePhi(datum)
        elif self.mode == RANK_ONE:
            self._backend = RankOnePhi(datum)
        else:
            self._model = model_for(datum)
            self._backend = None

        if self_check:
            self.self_check()

    # ------------------------------------------------------------------
    def _evaluate(self, coords, h):
        if self.mode == COMPLEX_CASE:
            return self._backend(coords, h)
        t = complex(h[0]) / 2.0
        if self.mode == RANK_ONE:
            return self._backend(coords, t)
        return phi_oracle_rank1(coords[..., 0].ravel(), t, self._model).reshape(coords.shape[:-1])

    def phi(self, point, radial):
        """
        φ_λ(exp H)

        Args:
            point: SpectralPoint 또는 (..., l) 배열
            radial: RadialPoint 또는 h 배열

        Returns:
            복소수 (단일 점) 또는 (...) 배열
        """
        coords = point.array if isinstance(point, SpectralPoint) else np.asarray(point, dtype=complex)
        h = radial.array if isinstance(radial, RadialPoint) else np.atleast_1d(np.asarray(radial, dtype=complex))
        scalar = coords.ndim == 1
        values = self._evaluate(np.atleast_2d(coords), h)
        return complex(values[0]) if scalar else values

    def phi_t(self, point, t):
        """계수 1: t = β(H)/2 에서의 φ_λ"""
        return self.phi(point, RadialPoint.from_t(t))

    # ------------------------------------------------------------------
    def sample_radial(self, n_points, seed, scale=2.0):
        """결정적 실수 동경 표본"""
        rng = np.random.default_rng(seed)
        return rng.uniform(-scale, scale, size=(n_points, self.datum.rank))

    def self_check(self, n_points=None, seed=None):
        """
        φ_ρ = 1, φ_λ = φ_{wλ} 확인

        Raises:
            ConventionError: 자체 검사 실패 (파라미터 대응 오류)
        """
        n_points = n_points or SAMPLING_CONFIG["RADIAL_POINTS"]
        seed = SAMPLING_CONFIG["SEED"] if seed is None else seed
        if self.mode == ORACLE:
            n_points = min(n_points, 5)
        tol = SELF_CHECK_TOL[self.mode]
        rho = self.datum.rho_coords.astype(complex)
        rng = np.random.default_rng(seed + 7)
        lam = rng.uniform(0.1, 1.3, self.datum.rank) + 1j * rng.uniform(-2.0, 2.0, self.datum.rank)
        orbit = self.datum.orbit_coords(lam)

        for h in self.sample_radial(n_points, seed):
            if self.mode != COMPLEX_CASE:
                h = np.abs(h)
            unit = self._evaluate(rho[None, :], h.astype(complex))[0]
            if abs(unit - 1.0) > tol:
                raise ConventionError(f"{self.datum.name} [{self.mode}]: φ_ρ = {unit} ≠ 1 (h={h.tolist()})")
            values = self._evaluate(orbit, h.astype(complex))
            spread = float(np.max(np.abs(values - values[0])))
            if spread > tol * max(1.0, float(np.max(np.abs(values)))):
                raise ConventionError(
                    f"{self.datum.name} [{self.mode}]: Weyl 불변성 위반 {spread:.2e} (h={h.tolist()})"
                )
        logger.debug(f"{self.datum.name} [{self.mode}]: 구면 함수 자체 검사 통과 ({n_points}점)")
        return True

    def describe(self):
        return {"space": self.datum.name, "mode": self.mode}
