"""
설정 모듈 패키지.
수치 허용치, 구적 설정, 경로 상수를 제공합니다.
"""

from .settings import (
    NUMERIC_CONFIG, QUAD_CONFIG, SERIES_CONFIG, TOLERANCE_CONFIG,
    SAMPLING_CONFIG, PARALLEL_CONFIG, FILE_CONFIG, SUITE_CONFIG
)
