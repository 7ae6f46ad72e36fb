"""
수치 계산 모듈 패키지.
복소 감마/초기하 함수와 수직선 구적, 유수 계산을 제공합니다.
"""

from .special import (
    cgamma, rgamma, hyp2f1, sinpi, cospi, richardson, is_nonpositive_integer, gamma_ratio
)
from .quadrature import (
    QuadratureConfig, composite_nodes, line_integral, check_boundary_decay,
    choose_halfwidth, residue_at, nested_residue, exponential_tail
)
