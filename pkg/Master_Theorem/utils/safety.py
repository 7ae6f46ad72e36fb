#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
안전한 종료 처리
"""

import os
import signal
import threading
import logging

# 로거 설정
logger = logging.getLogger(__name__)

# 전역 종료 플래그
shutdown_requested = False
shutdown_event = threading.Event()


# SIGINT(Ctrl+C) 핸들러
def sigint_handler(signum, frame):
    """SIGINT 신호 처리"""
    global shutdown_requested
    if not shutdown_requested:
        logger.warning("Ctrl+C가 감지되었습니다. 진행 중인 검사를 마치고 종료합니다... (다시 누르면 강제 종료)")
        shutdown_requested = True
        shutdown_event.set()
        # 두 번째 Ctrl+C는 강제 종료
        signal.signal(signal.SIGINT, force_exit_handler)
    else:
        force_exit_handler(signum, frame)


# 강제 종료 핸들러
def force_exit_handler(signum, frame):
    """강제 종료 처리"""
    logger.error("강제 종료 요청 감지. 즉시 종료합니다.")
    os._exit(1)


def setup_signal_handlers():
    """신호 핸들러 설정 (메인 스레드에서만 가능)"""
    if threading.current_thread() is not threading.main_thread():
        logger.debug("메인 스레드가 아니므로 신호 핸들러를 설정하지 않습니다.")
        return False
    signal.signal(signal.SIGINT, sigint_handler)
    logger.debug("안전한 종료 메커니즘이 설정되었습니다.")
    return True


def reset_shutdown():
    """종료 플래그 초기화 (새 실행 시작 시)"""
    global shutdown_requested
    shutdown_requested = False
    shutdown_event.clear()


def is_shutdown_requested():
    return shutdown_event.is_set()
