"""
Master Theorem 검증 모듈 패키지.
고전 정리, 급수와 윤곽 표현, 보간 항등식, 감마 형태, 환원 공간 검사를 제공합니다.
"""

from .space import SpaceContext, load_space, as_space
from .report import CheckRecord, VerificationReport, make_record, save_reports
from .classical import classical_series, classical_contour, classical_interpolate, ClassicalInterpolation
from .series import SeriesConfig, SeriesResult, series_f, series_coefficients, truncation_height
from .contour import ContourResult, contour_f, check_base_point
from .interpolation import (
    RadialProfile, InterpolationResult, radial_density, radial_profile, calibrate,
    interpolate_symm, l2_identity, holomorphy_probe, interpolation_grid
)
from .variants import GammaVariantResult, gamma_variants, gamma_weights, tilde_weights, tilde_coefficients
from .contour_iteration import ContourIterationResult, contour_iteration
from .reductive import ReductiveSpace, reductive_space, reductive_series, reductive_contour, reductive_verify
