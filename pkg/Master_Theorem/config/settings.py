#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
환경 설정 및 상수
"""

import os

from dotenv import load_dotenv

# .env 파일이 있으면 환경 변수로 로드
load_dotenv()

# 설정 파일 디렉토리
CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))

# 특수 함수 관련 설정
NUMERIC_CONFIG = {
    "GAMMA_MAX_ABS": 1e300,         # 감마 함수 오버플로 판정 기준
    "HYP_MAX_TERMS": 4000,          # 초기하 급수 최대 항 수
    "HYP_SERIES_TOL": 1e-17,        # 초기하 급수 상대 수렴 기준
    "HYP_DIRECT_RADIUS": 0.6,       # 직접 급수를 사용하는 |z| 반경
    "HYP_INTEGER_GAP": 1e-6,        # 정수 파라미터 판정 간격
    "HYP_OFFSET": 1e-3,             # 정수 퇴화 시 대칭 오프셋
    "SINGULAR_OFFSET": 1e-6,        # 제거 가능 특이점 오프셋 (ã)
    "POLE_GUARD": 1e-8,             # 극 초평면 근접 판정 거리
    "EXTRAPOLATION_TOL": 1e-6       # Richardson 외삽 잔차 허용치
}

# 구적법 관련 설정
QUAD_CONFIG = {
    "TRUNCATION_HALFWIDTH": 12.0,   # 축별 절단 반폭 L (Im λ_j 단위)
    "NODES_PER_AXIS": 20,           # 패널당 Gauss-Legendre 노드 수
    "TAIL_BOUND_TARGET": 1e-12,     # 절단 경계 꼬리 상한 목표
    "PANEL_WIDTH": 0.5,             # 복합 구적 패널 최대 폭
    "RESIDUE_NODES": 64,            # 유수 계산 사다리꼴 노드 수
    "RESIDUE_RADIUS": 0.25,         # 유수 계산 기본 반지름
    "MAX_HALFWIDTH": 60.0           # 자동 선택 L 의 상한
}

# 급수 절단 관련 설정
SERIES_CONFIG = {
    "TOLERANCE": 1e-10,             # 급수 꼬리 허용치
    "MAX_HEIGHT": 200               # 최대 높이 |μ|
}

# 검증 허용치
TOLERANCE_CONFIG = {
    "CLASSICAL": 1e-8,              # 고전 정리 (lhs - rhs)
    "SERIES_CONTOUR": 1e-6,         # 1부 = 2부
    "SIGMA_SPREAD": 1e-8,           # σ 독립성
    "INTERPOLATION": 1e-5,          # 보간 lhs/rhs 비율
    "HOLOMORPHY": 1e-4,             # 정칙성 유한 차분 비교
    "L2": 1e-4,                     # L² 항등식 상대 오차
    "RESIDUE": 1e-8,                # 유수 비율
    "B_PATHS": 1e-10,               # b 함수 두 경로 일치
    "FACTORIZATION": 1e-10,         # 밀도 인수분해
    "REDUCTIVE": 1e-6,              # 환원 공간 인수분해
    "DIMENSION_LIMIT": 1e-5,        # c 비율 극한과 d(μ)
    "IDENTITY": 1e-10,              # A·B = a·b 항등식
    "SLOPE": 0.2,                   # 윤곽 반복 기울기 상대 오차
    "RATE": 0.15,                   # 윤곽 반복 오차 기울기 절대 오차 (ΩH-P 기준)
    "ORACLE": 1e-6,                 # 계수 1 φ 와 Iwasawa 적분 비교
    "NORMALIZATION": 1e-12          # c(ρ) = 1
}

# 검사 묶음 구성
SUITE_CONFIG = {
    "CLASSICAL_HARDY": ["exp:P=1", "rgamma:P=2,A=1.7"],
    "CLASSICAL_LAMBDA": [0.2, 0.4, 0.5 + 0.3j, 0.7 - 0.2j, 0.9],
    "CLASSICAL_X": [0.2, 0.5, 1.0, 2.0],
    "CLASSICAL_SIGMA": [-0.2, -0.8],
    "SEMISIMPLE_SPACES": ["H2", "H3", "CH2", "A2C"],
    "REDUCTIVE_SPACES": ["H3"],
    "TORUS_RANK": 1,
    "RADIAL_POINTS": 10,             # 계수 1 급수 = 윤곽 비교 H 개수
    "RADIUS_FRACTION": 0.5,          # ‖H‖ ≤ 0.5·P/Ω
    "DIMENSION_HEIGHT": 10,
    "RESIDUE_HEIGHT": 3,
    "FACTORIZATION_POINTS": 100,
    "ORACLE_SAMPLES": 50
}

# 표본 추출 관련 설정
SAMPLING_CONFIG = {
    "SEED": 20240611,               # 기본 난수 시드
    "CERTIFICATE_SAMPLES": 10000,   # Hardy 인증서 검사 표본 수
    "TUBE_SAMPLES": 10000,          # 튜브 보조정리 표본 수
    "GENERIC_POINTS": 200,          # b 경로 비교 점 수
    "DECAY_POINTS": 500,            # 감쇠 상한 검증 점 수
    "RADIAL_POINTS": 50             # 구면 함수 자체 검사 동경 점 수
}

# 병렬 처리 관련 설정
PARALLEL_CONFIG = {
    "MAX_WORKERS": int(os.getenv("MASTER_THEOREM_WORKERS", "4")),  # 최대 병렬 작업자 수
    "THREAD_PREFIX": "Checker",     # 작업자 스레드 이름 접두사
    "WAIT_TIMEOUT": 10              # future 대기 타임아웃 (초)
}

# 파일 및 경로 관련 설정
FILE_CONFIG = {
    "OUTPUT_DIR": os.getenv("MASTER_THEOREM_OUTPUT_DIR", "verification_output"),
    "CATALOG_PATH": os.getenv("MASTER_THEOREM_CATALOG", os.path.join(CONFIG_DIR, "catalog.json5")),
    "LOG_FILE": "master_theorem.log",
    "LOG_LEVEL": os.getenv("MASTER_THEOREM_LOG_LEVEL", "INFO"),
    "REPORT_FILE": "report.json",
    "CSV_FILE": "report.csv",
    "HTML_FILE": "report.html",
    "CHECKPOINT_FILE": "checkpoint.json",
    "REPORT_SCHEMA_VERSION": "1.0"
}
