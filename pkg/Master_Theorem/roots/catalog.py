#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
대칭 공간 카탈로그 관리

catalog.json5 에는 계열, 계수, 중복도만 저장하고
나머지 근계 데이터는 로드할 때마다 다시 계산하고 검증합니다.
"""

import logging
from functools import lru_cache

import json5

from config.settings import FILE_CONFIG
from roots.root_system import build_root_system
from utils.errors import CatalogSchemaError, UnknownSpaceError, MasterTheoremError

# 로거 설정
logger = logging.getLogger(__name__)

TOP_LEVEL_KEYS = {"schema_version", "spaces"}
ENTRY_KEYS = {"name", "family", "rank", "multiplicities", "provenance"}
SUPPORTED_SCHEMA = 1


def _validate_entry(entry, index):
    if not isinstance(entry, dict):
        raise CatalogSchemaError(f"카탈로그 항목 #{index} 가 객체가 아닙니다")
    unknown = set(entry) - ENTRY_KEYS
    missing = ENTRY_KEYS - set(entry)
    if unknown:
        raise CatalogSchemaError(f"카탈로그 항목 #{index} 에 알 수 없는 키: {sorted(unknown)}")
    if missing:
        raise CatalogSchemaError(f"카탈로그 항목 #{index} 에 누락된 키: {sorted(missing)}")
    if not isinstance(entry["multiplicities"], dict):
        raise CatalogSchemaError(f"카탈로그 항목 {entry['name']} 의 multiplicities 는 객체여야 합니다")
    if not isinstance(entry["rank"], int) or isinstance(entry["rank"], bool):
        raise CatalogSchemaError(f"카탈로그 항목 {entry['name']} 의 rank 는 정수여야 합니다")


def load_catalog(path=None):
    """
    카탈로그 파일 로드 및 스키마 검증

    Args:
        path (str): 카탈로그 경로 (기본값: FILE_CONFIG["CATALOG_PATH"])

    Returns:
        dict: 이름 -> 항목 (파일 순서 유지)

    Raises:
        CatalogSchemaError: 알 수 없는 키, 누락된 키, 중복 이름, 검증 실패
    """
    path = path or FILE_CONFIG["CATALOG_PATH"]
    try:
        with open(path, 'r', encoding='utf-8') as f:
            document = json5.load(f)
    except (OSError, ValueError) as e:
        raise CatalogSchemaError(f"카탈로그 파일 읽기 실패 ({path}): {e}")

    if not isinstance(document, dict) or set(document) != TOP_LEVEL_KEYS:
        raise CatalogSchemaError(f"카탈로그 최상위 키는 {sorted(TOP_LEVEL_KEYS)} 이어야 합니다")
    if document["schema_version"] != SUPPORTED_SCHEMA:
        raise CatalogSchemaError(f"지원하지 않는 카탈로그 스키마 버전: {document['schema_version']}")

    entries = {}
    for index, entry in enumerate(document["spaces"]):
        _validate_entry(entry, index)
        if entry["name"] in entries:
            raise CatalogSchemaError(f"카탈로그에 중복된 이름: {entry['name']}")
        entries[entry["name"]] = entry

    logger.debug(f"카탈로그 로드 완료: {len(entries)}개 공간 ({path})")
    return entries


@lru_cache(maxsize=1)
def _default_catalog():
    return load_catalog()


def list_catalog_spaces(path=None):
    """카탈로그에 있는 공간 이름 목록"""
    catalog = load_catalog(path) if path else _default_catalog()
    return list(catalog)


def catalog_entry(name, path=None):
    """이름으로 카탈로그 항목 조회"""
    catalog = load_catalog(path) if path else _default_catalog()
    if name not in catalog:
        raise UnknownSpaceError(f"카탈로그에 없는 공간: {name} (사용 가능: {', '.join(catalog)})")
    return catalog[name]


@lru_cache(maxsize=64)
def build_catalog_space(name):
    """
    카탈로그 이름으로 검증된 RootDatum 생성

    Args:
        name (str): 공간 이름 (예: 'H3')

    Returns:
        RootDatum

    Raises:
        UnknownSpaceError: 카탈로그에 없는 이름
        CatalogSchemaError: 항목의 근계 데이터가 검증을 통과하지 못함
    """
    entry = catalog_entry(name)
    try:
        return build_root_system(entry["family"], entry["rank"], entry["multiplicities"], name=name)
    except MasterTheoremError as e:
        raise CatalogSchemaError(f"카탈로그 항목 {name} 검증 실패: {e}")
