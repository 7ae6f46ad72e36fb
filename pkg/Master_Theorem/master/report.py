#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
검증 보고서

검사 하나는 CheckRecord 한 줄이고, 보고서는 검사 ID 순으로 정렬된 기록과
Hardy 인증서, 절단 메타데이터, 발견 사항을 담습니다.
"""

import json
import logging
import threading
from dataclasses import dataclass, field, asdict
from datetime import datetime

import numpy as np

from config.settings import FILE_CONFIG
from utils.errors import ConvergenceError

# 로거 설정
logger = logging.getLogger(__name__)

METRICS = ("abs", "rel", "mixed")


def _complex_pair(value):
    value = complex(value)
    return [value.real, value.imag]


@dataclass
class CheckRecord:
    """
    검사 기록 한 줄

    metric:
        abs   |lhs - rhs| ≤ tol
        rel   |lhs - rhs| / |rhs| ≤ tol
        mixed |lhs - rhs| ≤ tol · max(1, |rhs|)
    """
    check_id: str
    point: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tolerance: float
    metric: str
    passed: bool
    note: str = ""

    def to_dict(self):
        data = asdict(self)
        data["lhs"] = _complex_pair(self.lhs)
        data["rhs"] = _complex_pair(self.rhs)
        return data

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["lhs"] = complex(*data["lhs"])
        data["rhs"] = complex(*data["rhs"])
        return cls(**data)

    def csv_row(self, space):
        return {
            "space": space,
            "check": self.check_id,
            "point": self.point,
            "lhs_re": self.lhs.real,
            "lhs_im": self.lhs.imag,
            "rhs_re": self.rhs.real,
            "rhs_im": self.rhs.imag,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tolerance": self.tolerance,
            "passed": int(self.passed),
        }


def make_record(check_id, point, lhs, rhs, tolerance, metric="mixed", note=""):
    """
    오차를 계산하여 CheckRecord 생성

    Raises:
        ConvergenceError: lhs 또는 rhs 가 유한하지 않음
    """
    if metric not in METRICS:
        raise ValueError(f"알 수 없는 비교 방식: {metric}")
    lhs, rhs = complex(lhs), complex(rhs)
    if not (np.isfinite(lhs) and np.isfinite(rhs)):
        raise ConvergenceError(f"{check_id} @ {point}: 유한하지 않은 값 (lhs={lhs}, rhs={rhs})")
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0 else (0.0 if abs_err == 0 else float("inf"))
    if metric == "abs":
        passed = abs_err <= tolerance
    elif metric == "rel":
        passed = rel_err <= tolerance
    else:
        passed = abs_err <= tolerance * max(1.0, abs(rhs))
    return CheckRecord(
        check_id=check_id,
        point=str(point),
        lhs=lhs,
        rhs=rhs,
        abs_err=float(abs_err),
        rel_err=float(rel_err),
        tolerance=float(tolerance),
        metric=metric,
        passed=bool(passed),
        note=note,
    )


@dataclass
class VerificationReport:
    """
    공간 하나(또는 고전 정리)에 대한 검증 결과

    Attributes:
        space: 공간 이름
        hardy: Hardy 함수 설명 (인증서 포함)
        records: CheckRecord 목록
        truncation: 급수 높이, 윤곽 반폭 등 절단 정보
        findings: 상수 불일치 등 발견 사항
    """
    space: str
    hardy: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    truncation: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    schema_version: str = FILE_CONFIG["REPORT_SCHEMA_VERSION"]

    def __post_init__(self):
        self._lock = threading.Lock()

    def add(self, record):
        with self._lock:
            self.records.append(record)
        level = logging.DEBUG if record.passed else logging.WARNING
        logger.log(level, f"[{self.space}] {record.check_id} @ {record.point}: "
                          f"오차 {record.abs_err:.3e} (허용 {record.tolerance:.1e}) "
                          f"{'통과' if record.passed else '실패'}")
        return record

    def extend(self, records):
        for record in records:
            self.add(record)

    def sorted_records(self):
        return sorted(self.records, key=lambda r: (r.check_id, r.point))

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.sorted_records() if not r.passed]

    def summary(self):
        total = len(self.records)
        failed = len(self.failures)
        return {"space": self.space, "checks": total, "passed": total - failed, "failed": failed}

    def to_dict(self):
        return {
            "schema_version": self.schema_version,
            "space": self.space,
            "hardy": self.hardy,
            "passed": self.passed,
            "summary": self.summary(),
            "truncation": self.truncation,
            "findings": [_jsonable(f) for f in self.findings],
            "records": [r.to_dict() for r in self.sorted_records()],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            space=data["space"],
            hardy=data.get("hardy", {}),
            records=[CheckRecord.from_dict(r) for r in data.get("records", [])],
            truncation=data.get("truncation", {}),
            findings=data.get("findings", []),
            schema_version=data.get("schema_version", FILE_CONFIG["REPORT_SCHEMA_VERSION"]),
        )

    def csv_rows(self):
        return [r.csv_row(self.space) for r in self.sorted_records()]


def _jsonable(value):
    """복소수, numpy 값을 JSON 직렬화 가능한 값으로 변환"""
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (complex, np.complexfloating)):
        return _complex_pair(value)
    if isinstance(value, np.generic):
        return value.item()
    return value


def save_reports(reports, path):
    """
    보고서 목록을 JSON 파일로 저장

    Returns:
        bool: 성공 여부
    """
    document = {
        "schema_version": FILE_CONFIG["REPORT_SCHEMA_VERSION"],
        "generated_at": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in sorted(reports, key=lambda r: r.space)],
    }
    try:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(document, f, ensure_ascii=False, indent=2)
        logger.info(f"보고서 저장 완료: {path}")
        return True
    except Exception as e:
        logger.error(f"보고서 저장 실패: {str(e)}")
        return False
