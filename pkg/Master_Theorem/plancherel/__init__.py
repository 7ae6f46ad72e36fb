"""
Plancherel 모듈 패키지.
c 함수, 밀도 인수분해, Weyl 차원 다항식을 제공합니다.
"""

from .c_function import CFunction, c_beta, c_function, density
from .factors import DensityFactors, BetaFactor, density_factors
from .dimension import DimensionPolynomial
