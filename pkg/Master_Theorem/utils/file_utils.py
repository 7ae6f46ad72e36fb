#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
파일 처리 유틸리티
- 검사 결과 CSV 내보내기 (고정 열 순서)
- 표 계산 결과 CSV 쓰기
"""

import os
import csv
import logging

# 로거 설정
logger = logging.getLogger(__name__)

# 검사 결과 CSV 열 순서
REPORT_FIELDS = [
    'space',        # 공간 이름
    'check',        # 검사 ID
    'point',        # λ 또는 H
    'lhs_re',       # 좌변 실수부
    'lhs_im',       # 좌변 허수부
    'rhs_re',       # 우변 실수부
    'rhs_im',       # 우변 허수부
    'abs_err',      # 절대 오차
    'rel_err',      # 상대 오차
    'tolerance',    # 허용치
    'passed'        # 통과 여부 (1/0)
]

# 실수 출력 형식 (같은 입력이면 같은 바이트)
FLOAT_FORMAT = '%.17g'


def format_value(value):
    """CSV 셀 값 형식화"""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    return value


def export_to_csv(reports, output_path):
    """
    검증 보고서를 CSV 로 내보내기

    Args:
        reports (list): VerificationReport 목록
        output_path (str): 출력 파일 경로

    Returns:
        str: CSV 파일 경로 (실패 시 None)
    """
    if not reports:
        logger.warning("내보낼 보고서가 없습니다.")
        return None

    try:
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        rows = []
        for report in sorted(reports, key=lambda r: r.space):
            rows.extend(report.csv_rows())

        with open(output_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.DictWriter(f, fieldnames=REPORT_FIELDS, lineterminator='\n')
            writer.writeheader()
            for row in rows:
                writer.writerow({k: format_value(row.get(k, "")) for k in REPORT_FIELDS})

        logger.info(f"CSV 내보내기 완료: {output_path} ({len(rows)}행)")
        return output_path

    except Exception as e:
        logger.error(f"CSV 내보내기 중 오류: {e}", exc_info=True)
        return None


def write_table(stream, fieldnames, rows):
    """
    표 계산 결과를 열린 스트림에 CSV 로 쓰기

    Args:
        stream: 텍스트 스트림 (sys.stdout 또는 파일)
        fieldnames (list): 열 이름
        rows (iterable): 열 이름 -> 값 사전
    """
    writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator='\n')
    writer.writeheader()
    count = 0
    for row in rows:
        writer.writerow({k: format_value(row[k]) for k in fieldnames})
        count += 1
    logger.debug(f"표 {count}행 출력")
    return count
