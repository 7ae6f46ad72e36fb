#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
검증 보고서, CSV/HTML 출력, 체크포인트 테스트
"""

import csv
import io
import json
import os

import pytest

from master.report import VerificationReport, make_record, save_reports
from utils import safety
from utils.checkpoint import clear_checkpoint, load_checkpoint, save_checkpoint
from utils.errors import ConvergenceError
from utils.file_utils import REPORT_FIELDS, export_to_csv, write_table
from utils.html_report import add_to_html_report, finalize_html_report, init_html_report


@pytest.fixture
def report():
    report = VerificationReport(space="H3", hardy={"name": "exp(P=1)", "P": 1.0})
    report.add(make_record("series_contour", "H=0.3", 0.25 + 1e-9j, 0.25, 1e-6))
    report.add(make_record("c.normalization", "ρ", 1.0 + 1e-3, 1.0, 1e-12, metric="abs"))
    report.findings.append({"kind": "K_b_constant", "ratio": 157.91 + 0j})
    return report


@pytest.mark.parametrize("metric,lhs,rhs,tol,expected", [
    ("abs", 1.0, 1.001, 1e-2, True),
    ("abs", 1.0, 1.1, 1e-2, False),
    ("rel", 100.0, 100.5, 1e-2, True),
    ("mixed", 100.0, 100.5, 1e-2, True),
    ("mixed", 0.0, 0.05, 1e-2, False),
])
def test_make_record_metrics(metric, lhs, rhs, tol, expected):
    assert make_record("x", "p", lhs, rhs, tol, metric=metric).passed is expected


def test_make_record_rejects_nonfinite():
    with pytest.raises(ConvergenceError):
        make_record("x", "p", float("nan"), 1.0, 1e-3)
    with pytest.raises(ValueError):
        make_record("x", "p", 1.0, 1.0, 1e-3, metric="max")


def test_zero_rhs_relative_error():
    assert make_record("x", "p", 0.0, 0.0, 1e-3, metric="rel").passed
    assert not make_record("x", "p", 1e-3, 0.0, 1e-3, metric="rel").passed


def test_report_summary(report):
    assert not report.passed
    assert [r.check_id for r in report.failures] == ["c.normalization"]
    assert report.summary() == {"space": "H3", "checks": 2, "passed": 1, "failed": 1}
    # 정렬 순서는 검사 ID
    assert [r.check_id for r in report.sorted_records()] == ["c.normalization", "series_contour"]


def test_report_dict_roundtrip(report):
    data = json.loads(json.dumps(report.to_dict()))
    assert data["findings"][0]["ratio"] == [157.91, 0.0]
    restored = VerificationReport.from_dict(data)
    assert restored.summary() == report.summary()
    assert restored.records[1].lhs == 0.25 + 1e-9j


def test_save_reports(report, output_dir):
    path = os.path.join(output_dir, "report.json")
    assert save_reports([report], path)
    with open(path, encoding="utf-8") as f:
        document = json.load(f)
    assert document["passed"] is False
    assert document["reports"][0]["space"] == "H3"


def test_csv_export_is_deterministic(report, output_dir):
    first = export_to_csv([report], os.path.join(output_dir, "a.csv"))
    second = export_to_csv([report], os.path.join(output_dir, "b.csv"))
    with open(first, "rb") as f, open(second, "rb") as g:
        assert f.read() == g.read()
    with open(first, encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0].keys()) == REPORT_FIELDS
    assert rows[0]["check"] == "c.normalization"
    assert rows[0]["passed"] == "0"
    assert float(rows[1]["lhs_im"]) == 1e-9


def test_csv_export_empty(output_dir):
    assert export_to_csv([], os.path.join(output_dir, "empty.csv")) is None


def test_write_table():
    stream = io.StringIO()
    count = write_table(stream, ["mu", "d"], [{"mu": 0, "d": 1.0}, {"mu": 1, "d": 4.0}])
    assert count == 2
    assert stream.getvalue() == "mu,d\n0,1\n1,4\n"


def test_html_report(report, output_dir):
    path = init_html_report(os.path.join(output_dir, "report.html"))
    count = add_to_html_report(report, path, 0)
    finalize_html_report(path)
    assert count == 1
    with open(path, encoding="utf-8") as f:
        text = f.read()
    assert "1/2 통과" in text
    assert "c.normalization" in text
    assert text.rstrip().endswith("</html>")
    assert add_to_html_report(report, None, 3) == 3


def test_checkpoint_cycle(output_dir):
    records = {"H3": {"space": "H3"}}
    save_checkpoint("semisimple", ["H3"], records, {"total_checks": 4, "passed_checks": 4}, output_dir)
    checkpoint = load_checkpoint("semisimple", output_dir)
    assert checkpoint["completed"] == ["H3"]
    assert checkpoint["total_checks"] == 4
    assert load_checkpoint("classical", output_dir) is None
    clear_checkpoint(output_dir)
    assert load_checkpoint("semisimple", output_dir) is None


def test_corrupt_checkpoint_is_backed_up(output_dir):
    path = os.path.join(output_dir, "checkpoint.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write("{broken")
    assert load_checkpoint("semisimple", output_dir) is None
    assert any(name.startswith("checkpoint.json.backup.") for name in os.listdir(output_dir))


def test_shutdown_flag():
    assert not safety.is_shutdown_requested()
    safety.shutdown_event.set()
    assert safety.is_shutdown_requested()
    safety.reset_shutdown()
    assert not safety.is_shutdown_requested()
