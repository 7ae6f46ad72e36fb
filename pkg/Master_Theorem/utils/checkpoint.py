#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
체크포인트 관리
"""

import os
import json
import logging
from datetime import datetime

from config.settings import FILE_CONFIG

# 로거 설정
logger = logging.getLogger(__name__)


def _checkpoint_path(output_dir):
    return os.path.join(output_dir, FILE_CONFIG["CHECKPOINT_FILE"])


def save_checkpoint(suite, completed, records, stats=None, output_dir=None):
    """
    현재 검사 진행 상태 체크포인트 저장

    Args:
        suite (str): 실행 중인 검사 묶음 (classical / semisimple / reductive)
        completed (list): 완료된 작업 ID 목록
        records (dict): 작업 ID -> 보고서 사전 (VerificationReport.to_dict)
        stats (dict): 검사 통계
        output_dir (str): 출력 디렉토리
    """
    output_dir = output_dir or FILE_CONFIG["OUTPUT_DIR"]
    checkpoint_path = _checkpoint_path(output_dir)

    if stats is None:
        stats = {'total_checks': 0, 'passed_checks': 0, 'failed_checks': 0, 'errors': 0}

    checkpoint_data = {
        "suite": suite,
        "completed": sorted(completed),
        "records": records,
        "total_checks": stats.get('total_checks', 0),
        "passed_checks": stats.get('passed_checks', 0),
        "failed_checks": stats.get('failed_checks', 0),
        "errors": stats.get('errors', 0),
        "timestamp": datetime.now().isoformat()
    }

    with open(checkpoint_path, 'w', encoding='utf-8') as f:
        json.dump(checkpoint_data, f, ensure_ascii=False, indent=2)

    logger.info(f"체크포인트 저장 완료: {suite} (완료 작업: {len(completed)}개)")


def load_checkpoint(suite, output_dir=None):
    """
    마지막 체크포인트 로드

    다른 검사 묶음의 체크포인트는 무시합니다.

    Returns:
        dict or None: 체크포인트 데이터
    """
    output_dir = output_dir or FILE_CONFIG["OUTPUT_DIR"]
    checkpoint_path = _checkpoint_path(output_dir)

    if os.path.exists(checkpoint_path):
        try:
            with open(checkpoint_path, 'r', encoding='utf-8') as f:
                checkpoint = json.load(f)
            if checkpoint.get("suite") != suite:
                logger.info(f"다른 검사 묶음의 체크포인트 무시: {checkpoint.get('suite')}")
                return None
            logger.info(f"체크포인트 로드됨: {suite} (완료 {len(checkpoint['completed'])}개, 최종 업데이트: {checkpoint['timestamp']})")
            return checkpoint
        except Exception as e:
            logger.error(f"체크포인트 로드 오류: {e}")
            # 손상된 체크포인트 파일 백업
            backup_path = f"{checkpoint_path}.backup.{datetime.now().strftime('%Y%m%d%H%M%S')}"
            try:
                os.rename(checkpoint_path, backup_path)
                logger.info(f"손상된 체크포인트 파일 백업: {backup_path}")
            except OSError:
                pass

    return None


def clear_checkpoint(output_dir=None):
    """검사 묶음이 끝나면 체크포인트 삭제"""
    checkpoint_path = _checkpoint_path(output_dir or FILE_CONFIG["OUTPUT_DIR"])
    if os.path.exists(checkpoint_path):
        os.remove(checkpoint_path)
        logger.debug(f"체크포인트 삭제: {checkpoint_path}")
