"""
b 함수 모듈 패키지.
정규화 함수 b(λ), 대칭화 ã(λ), 유수 조건, 감쇠 상한 검사를 제공합니다.
"""

from .bfunction import BFunction
from .symmetrize import a_tilde, contour_integrand_factor, unsymmetrized_factor
from .residues import residue_check, ResidueResult
from .decay import (
    DecayFit, pi_b_bound_check, b_over_cc_bound_check, a_tilde_bound_check, sample_tube
)
