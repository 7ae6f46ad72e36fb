#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
검증 대상 공간 묶음

근계 하나에 딸린 c 함수, 밀도 인수, b 함수, 차원 다항식, 구면 함수 평가기를 한 번만 만들어 공유합니다.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from bfunction.bfunction import BFunction
from plancherel.c_function import CFunction
from plancherel.dimension import DimensionPolynomial
from plancherel.factors import DensityFactors
from roots.catalog import build_catalog_space
from roots.root_system import RootDatum
from spherical.evaluator import SphericalEvaluator, default_mode
from utils.errors import UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)


@dataclass
class SpaceContext:
    """
    공간별 계산 객체 묶음

    Attributes:
        datum: RootDatum
        cfunction: CFunction
        factors: DensityFactors
        bfunction: BFunction
        dimension: DimensionPolynomial
        evaluator: SphericalEvaluator (닫힌 형태가 없으면 None)
    """
    datum: RootDatum
    cfunction: CFunction
    factors: DensityFactors
    bfunction: BFunction
    dimension: DimensionPolynomial
    evaluator: object = None

    @classmethod
    def from_datum(cls, datum, mode=None):
        cfunction = CFunction(datum)
        factors = DensityFactors(datum)
        bfunction = BFunction(datum, cfunction=cfunction, factors=factors)
        try:
            evaluator = SphericalEvaluator(datum, mode=mode or default_mode(datum))
        except UnsupportedSpaceError as e:
            logger.info(f"{datum.name}: 구면 함수 평가기 없음 ({e})")
            evaluator = None
        return cls(
            datum=datum,
            cfunction=cfunction,
            factors=factors,
            bfunction=bfunction,
            dimension=DimensionPolynomial(factors),
            evaluator=evaluator,
        )

    @property
    def name(self):
        return self.datum.name

    @property
    def rank(self):
        return self.datum.rank

    def require_evaluator(self):
        """
        Raises:
            UnsupportedSpaceError: 닫힌 형태 구면 함수가 없는 공간
        """
        if self.evaluator is None:
            raise UnsupportedSpaceError(f"{self.name}: 구면 함수 평가기가 없어 이 검사를 수행할 수 없습니다")
        return self.evaluator

    def radius(self, a):
        """급수 수렴 반경 P/Ω"""
        return a.certificate.P / self.datum.omega_max

    def weight_table(self, max_height):
        """
        높이 ≤ max_height 인 μ 와 d(μ), 높이 배열

        Returns:
            tuple: (μ 배열 (n, l), d 배열 (n,), 높이 배열 (n,))
        """
        weights = self.datum.dominant_weights(max_height)
        mus = np.array([mu.coords for mu in weights], dtype=float).reshape(-1, self.rank)
        dims = np.array([self.dimension.weyl_dim(mu) for mu in weights], dtype=float)
        heights = np.array([mu.height for mu in weights], dtype=int)
        return mus, dims, heights


@lru_cache(maxsize=32)
def load_space(name):
    """카탈로그 이름으로 SpaceContext 생성 (캐시)"""
    return SpaceContext.from_datum(build_catalog_space(name))


def as_space(space):
    """이름, RootDatum, SpaceContext 중 무엇이든 SpaceContext 로 변환"""
    if isinstance(space, SpaceContext):
        return space
    if isinstance(space, RootDatum):
        return SpaceContext.from_datum(space)
    return load_space(str(space))
