#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
HTML 보고서 생성
"""

import os
import html
import logging
from datetime import datetime

# 로거 설정
logger = logging.getLogger(__name__)


def init_html_report(html_path, title="Master Theorem 검증 보고서"):
    """
    HTML 보고서 파일 초기화

    Args:
        html_path (str): HTML 파일 경로
        title (str): 보고서 제목

    Returns:
        str: 생성된 HTML 파일 경로
    """
    directory = os.path.dirname(html_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    # HTML 기본 구조 생성
    html_content = """<!DOCTYPE html>
<html>
<head>
    <meta charset="UTF-8">
    <title>""" + html.escape(title) + """</title>
    <style>
        body { font-family: Arial, sans-serif; margin: 20px; }
        h1 { color: #2c3e50; border-bottom: 2px solid #3498db; padding-bottom: 10px; }
        .space-item {
            border: 1px solid #ddd;
            margin-bottom: 20px;
            padding: 15px;
            border-radius: 5px;
            background-color: #f9f9f9;
        }
        .space-item h3 {
            margin-top: 0;
            color: #3498db;
            border-bottom: 1px solid #ddd;
            padding-bottom: 5px;
        }
        table { border-collapse: collapse; width: 100%; font-size: 0.9em; }
        th, td { border: 1px solid #ddd; padding: 4px 8px; text-align: left; }
        th { background-color: #ecf0f1; }
        .info-label { font-weight: bold; color: #7f8c8d; }
        .failed { color: #e74c3c; }
        .passed { color: #27ae60; }
        .finding { color: #d35400; }
        .timestamp {
            color: #7f8c8d;
            font-size: 0.8em;
            text-align: right;
            margin-top: 20px;
        }
    </style>
</head>
<body>
    <h1>""" + html.escape(title) + """</h1>
    <div class="timestamp">생성 시간: """ + datetime.now().strftime('%Y-%m-%d %H:%M:%S') + """</div>
    <div id="report-list">
"""

    with open(html_path, 'w', encoding='utf-8') as f:
        f.write(html_content)

    logger.info(f"HTML 보고서 초기화 완료: {html_path}")

    return html_path


def add_to_html_report(report, html_file, item_count):
    """
    HTML 보고서에 공간 하나의 검사 결과 추가

    Args:
        report (VerificationReport): 추가할 보고서
        html_file (str): HTML 파일 경로
        item_count (int): 현재 항목 카운터

    Returns:
        int: 업데이트된 항목 카운터
    """
    if html_file is None:
        return item_count

    summary = report.summary()
    status = 'passed' if report.passed else 'failed'
    hardy = ", ".join(f"{k}={v}" for k, v in report.hardy.items())

    html_item = """
        <div class="space-item">
            <h3>""" + html.escape(report.space) + """</h3>
            <div><span class="info-label">Hardy:</span> """ + html.escape(hardy) + """</div>
            <div><span class="info-label">결과:</span> <span class=\"""" + status + """\">""" + \
        f"{summary['passed']}/{summary['checks']} 통과" + """</span></div>
    """

    for finding in report.findings:
        html_item += """
            <div class="finding">발견: """ + html.escape(str(finding)) + """</div>
    """

    html_item += """
            <table>
                <tr><th>검사</th><th>점</th><th>lhs</th><th>rhs</th><th>절대 오차</th><th>허용치</th><th>결과</th></tr>
    """
    for record in report.sorted_records():
        css = 'passed' if record.passed else 'failed'
        html_item += (
            f"                <tr><td>{html.escape(record.check_id)}</td><td>{html.escape(record.point)}</td>"
            f"<td>{record.lhs:.12g}</td><td>{record.rhs:.12g}</td>"
            f"<td>{record.abs_err:.3e}</td><td>{record.tolerance:.1e}</td>"
            f"<td class=\"{css}\">{'통과' if record.passed else '실패'}</td></tr>\n"
        )

    html_item += """
            </table>
        </div>
    """

    with open(html_file, 'a', encoding='utf-8') as f:
        f.write(html_item)

    item_count += 1

    return item_count


def finalize_html_report(html_file):
    """
    HTML 보고서 마무리

    Args:
        html_file (str): HTML 파일 경로
    """
    if html_file is None:
        return

    with open(html_file, 'a', encoding='utf-8') as f:
        f.write("""
    </div>
    <div class="timestamp">완료 시간: """ + datetime.now().strftime('%Y-%m-%d %H:%M:%S') + """</div>
</body>
</html>
""")

    logger.info(f"HTML 보고서 마무리 완료: {html_file}")
