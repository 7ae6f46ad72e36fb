"""
구면 함수 모듈 패키지.
복소 경우 닫힌 형태, 계수 1 초기하 표현, Iwasawa 적분 오라클, 콤팩트 쌍대 접속을 제공합니다.
"""

from .radial import RadialPoint
from .complex_case import ComplexCasePhi, phi_complex
from .rank_one import RankOnePhi, phi_rank1
from .oracle import phi_oracle_rank1, model_for, SPLIT_MODEL, COMPLEX_MODEL
from .evaluator import SphericalEvaluator, default_mode, COMPLEX_CASE, RANK_ONE, ORACLE
from .compact import psi_compact, su2_character
from .bounds import opdam_bound_check, psi_bound_check
