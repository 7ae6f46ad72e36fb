#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
MasterTheoremVerifier 작업 구성, 병렬 실행, 체크포인트 재개 테스트
"""

import json
import os
import threading

import pytest

from master.report import make_record
from utils.checkpoint import save_checkpoint
from utils.errors import UsageError
from verifier import MasterTheoremVerifier, VerificationJob


def _job(job_id, space, value=1.0, calls=None):
    def run():
        if calls is not None:
            calls.append(job_id)
        record = make_record(job_id.split(":")[-1], "p", value, 1.0, 1e-6)
        return [record], {"height": 3}, []
    return VerificationJob(job_id, space, {"name": "exp(P=1)"}, run)


def _failing_job(job_id, space):
    def run():
        raise ZeroDivisionError("boom")
    return VerificationJob(job_id, space, {"name": "exp(P=1)"}, run)


@pytest.fixture
def verifier(output_dir):
    return MasterTheoremVerifier(output_dir=output_dir, max_workers=2)


@pytest.mark.parametrize("name,kinds", [
    ("H3", ["structure", "decay", "spherical", "series_contour", "gamma", "interpolation", "iteration", "oracle"]),
    ("CH2", ["structure", "decay", "spherical", "series_contour", "gamma", "interpolation", "iteration"]),
    ("A2C", ["structure", "decay", "spherical", "series_contour", "gamma"]),
    ("A2R", ["structure", "decay"]),
])
def test_semisimple_jobs(verifier, name, kinds):
    jobs = verifier.build_jobs("semisimple", [name])
    assert [job.job_id for job in jobs] == [f"{name}:{kind}" for kind in kinds]
    assert all(job.space == name for job in jobs)


def test_classical_and_reductive_jobs(verifier):
    jobs = verifier.build_jobs("classical")
    assert [job.job_id for job in jobs] == ["classical:exp:P=1", "classical:rgamma:P=2,A=1.7"]
    (job,) = verifier.build_jobs("reductive")
    assert job.job_id == "T1xH3:reductive"
    assert job.hardy["A"] == 0.0


def test_build_job_errors(verifier, output_dir):
    with pytest.raises(UsageError):
        verifier.build_jobs("everything")
    with pytest.raises(UsageError):
        verifier.build_jobs("classical", hardy_spec="exp:Q=1")
    with pytest.raises(UsageError):
        MasterTheoremVerifier(output_dir=output_dir, tolerances={"NOPE": 1.0})


def test_verify_merges_by_space(verifier, monkeypatch):
    jobs = [_job("H3:a", "H3"), _job("H2:a", "H2"), _job("H3:b", "H3", value=2.0)]
    monkeypatch.setattr(verifier, "build_jobs", lambda *args: jobs)
    reports = verifier.verify("semisimple")
    assert [r.space for r in reports] == ["H2", "H3"]
    assert reports[1].summary() == {"space": "H3", "checks": 2, "passed": 1, "failed": 1}
    assert reports[1].truncation == {"a": {"height": 3}, "b": {"height": 3}}
    assert verifier.stats == {"total_checks": 3, "passed_checks": 2, "failed_checks": 1, "errors": 0}
    assert not verifier.passed
    # 모두 끝나면 체크포인트 삭제
    assert not os.path.exists(os.path.join(verifier.output_dir, "checkpoint.json"))


def test_job_error_becomes_failed_record(verifier, monkeypatch):
    monkeypatch.setattr(verifier, "build_jobs", lambda *args: [_failing_job("H3:decay", "H3")])
    (report,) = verifier.verify("semisimple")
    (record,) = report.records
    assert not record.passed
    assert record.check_id == "decay.error"
    assert record.note.startswith("ZeroDivisionError")
    assert verifier.stats["errors"] == 1


def test_resume_skips_completed(verifier, monkeypatch):
    calls = []
    jobs = [_job("H3:a", "H3", calls=calls), _job("H3:b", "H3", calls=calls)]
    done = verifier._run_job(jobs[0], threading.Lock())
    save_checkpoint("semisimple", ["H3:a"], {"H3:a": done.to_dict()},
                    {"total_checks": 1, "passed_checks": 1}, verifier.output_dir)
    calls.clear()
    monkeypatch.setattr(verifier, "build_jobs", lambda *args: jobs)
    (report,) = verifier.verify("semisimple", resume=True)
    assert calls == ["H3:b"]
    assert len(report.records) == 2
    assert verifier.stats["total_checks"] == 2


def test_write_outputs(verifier, monkeypatch):
    monkeypatch.setattr(verifier, "build_jobs", lambda *args: [_job("H3:a", "H3")])
    reports = verifier.verify("semisimple")
    paths = verifier.write_outputs(reports)
    assert all(paths.values())
    with open(paths["report"], encoding="utf-8") as f:
        assert json.load(f)["passed"] is True
    assert verifier.passed


@pytest.mark.slow
def test_classical_suite(verifier):
    reports = verifier.verify("classical", hardy_spec="exp:P=1")
    (report,) = reports
    assert report.space == "classical"
    assert report.passed, report.failures
    assert len(report.records) == 15
