#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
예외 계층 정의

모든 계산 오류는 MasterTheoremError 를 상속합니다.
파라미터 검증 오류는 ValueError 도 함께 상속합니다.
"""


class MasterTheoremError(Exception):
    """모든 라이브러리 오류의 기본 클래스"""


# 수치 계산 (numerics)
class GammaPoleError(MasterTheoremError, ValueError):
    """감마 함수가 0 이하의 정수에서 평가됨"""

    def __init__(self, message, root=None):
        super().__init__(message)
        self.root = root


class GammaOverflowError(MasterTheoremError, OverflowError):
    """감마 함수 값이 표현 범위를 벗어남"""


class ConvergenceError(MasterTheoremError):
    """급수 또는 구적법이 수렴하지 않음"""


class ParameterPoleError(MasterTheoremError, ValueError):
    """초기하 함수의 c 파라미터가 0 이하의 정수"""


class DecayCertificateError(MasterTheoremError):
    """절단 경계에서 피적분 함수가 감쇠 상한을 넘음"""


class ResidueRadiusError(MasterTheoremError):
    """두 반지름에서 계산한 유수가 일치하지 않음 (다른 극점 포함)"""


class QuadratureConfigError(MasterTheoremError, ValueError):
    """구적 설정 값이 유효하지 않음"""


# 근계 (roots)
class ParityViolationError(MasterTheoremError, ValueError):
    """중복도 홀짝 조건 위반"""


class MultiplicityError(MasterTheoremError, ValueError):
    """Weyl 불변이 아니거나 알 수 없는 길이 클래스의 중복도"""


class UnsupportedFamilyError(MasterTheoremError, ValueError):
    """지원하지 않는 근계 계열"""


class UnknownSpaceError(MasterTheoremError, KeyError):
    """카탈로그에 없는 공간 이름"""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class CatalogSchemaError(MasterTheoremError, ValueError):
    """카탈로그 파일 스키마 오류"""


class ZeroRootError(MasterTheoremError, ValueError):
    """영벡터가 근으로 전달됨"""


class TubeParameterError(MasterTheoremError, ValueError):
    """튜브 영역 파라미터(δ, η) 범위 오류"""


# Plancherel / b 함수
class DimensionIntegralityError(MasterTheoremError):
    """차원 다항식 값이 정수가 아님 (인수분해 오류 신호)"""


class FactorizationError(MasterTheoremError):
    """Plancherel 밀도 인수분해의 양수성 검사 실패"""


class PoleProximityError(MasterTheoremError):
    """평가점이 극 초평면에 너무 가까움"""

    def __init__(self, message, distance=None):
        super().__init__(message)
        self.distance = distance


class DomainViolationError(MasterTheoremError, ValueError):
    """평가점이 허용 영역(튜브, H(δ), 기저) 밖에 있음"""


class UnresolvedSingularityError(MasterTheoremError):
    """제거 가능 특이점의 외삽 잔차가 허용치를 넘음"""


# 구면 함수
class ConventionError(MasterTheoremError):
    """구면 함수 평가기의 규약 자체 검사 실패"""


class UnsupportedSpaceError(MasterTheoremError):
    """해당 연산을 지원하지 않는 공간"""


class ExtrapolationError(MasterTheoremError):
    """특이점 근방 외삽 실패"""


class ContinuationDomainError(MasterTheoremError, ValueError):
    """해석 접속이 Ω̄_π 밖으로 요청됨"""


# Hardy 클래스 / 검증
class CertificateError(MasterTheoremError, ValueError):
    """Hardy 함수 인증서가 없거나 유효하지 않음"""


class RadiusError(MasterTheoremError, ValueError):
    """급수 수렴 반경 밖의 점"""


class TruncationCertificateError(MasterTheoremError):
    """허용 높이 안에서 급수 꼬리 상한을 만족할 수 없음"""


class TailFitError(MasterTheoremError):
    """적분 꼬리의 지수 적합 잔차가 너무 큼"""


# CLI
class UsageError(MasterTheoremError, ValueError):
    """명령행 사용 오류 (종료 코드 2)"""
