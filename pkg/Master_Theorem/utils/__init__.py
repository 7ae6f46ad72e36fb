"""
유틸리티 모듈 패키지.
예외 계층, 체크포인트, HTML/CSV 보고서, 안전한 종료 처리를 제공합니다.
"""

from .checkpoint import save_checkpoint, load_checkpoint, clear_checkpoint
from .html_report import init_html_report, add_to_html_report, finalize_html_report
from .file_utils import export_to_csv, write_table, REPORT_FIELDS
from .safety import setup_signal_handlers, sigint_handler, force_exit_handler, reset_shutdown, is_shutdown_requested
