#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
MasterTheoremVerifier 클래스 기본 구조
"""

import os
import logging
import threading
import concurrent.futures
from dataclasses import dataclass
from datetime import datetime
from typing import Callable

from tqdm import tqdm

from config.settings import (
    TOLERANCE_CONFIG, SAMPLING_CONFIG, PARALLEL_CONFIG, FILE_CONFIG, SUITE_CONFIG
)
from hardy.builtins import parse_hardy_spec, product_hardy, exp_decay
from master import checks
from master.reductive import reductive_space, reductive_verify
from master.report import VerificationReport, save_reports
from master.space import load_space
from utils.checkpoint import save_checkpoint, load_checkpoint, clear_checkpoint
from utils.errors import UsageError
from utils.file_utils import export_to_csv
from utils.html_report import init_html_report, add_to_html_report, finalize_html_report
from utils.safety import is_shutdown_requested

# 로거 설정
logger = logging.getLogger(__name__)

SUITES = ("classical", "semisimple", "reductive")
CLASSICAL_SPACE = "classical"
DEFAULT_HARDY = "exp:P=1"


@dataclass
class VerificationJob:
    """검사 작업 하나 (run() -> (기록 목록, 절단 정보, 발견 사항))"""
    job_id: str
    space: str
    hardy: dict
    run: Callable


class MasterTheoremVerifier:
    """Master Theorem 세 부분 항등식 검증 클래스"""

    def __init__(self, output_dir=None, seed=None, tolerances=None, series_cfg=None,
                 quad_cfg=None, max_workers=None):
        """
        초기화

        Args:
            output_dir: 보고서, 체크포인트, 로그 저장 디렉토리
            seed: 표본 추출 시드
            tolerances: TOLERANCE_CONFIG 를 덮어쓸 허용치 사전
            series_cfg: SeriesConfig (None 이면 기본값)
            quad_cfg: QuadratureConfig (None 이면 Hardy 인증서로 자동 선택)
            max_workers: 병렬 작업자 수
        """
        self.output_dir = output_dir or FILE_CONFIG["OUTPUT_DIR"]
        os.makedirs(self.output_dir, exist_ok=True)

        self.seed = SAMPLING_CONFIG["SEED"] if seed is None else int(seed)
        self.tolerances = dict(TOLERANCE_CONFIG)
        unknown = set(tolerances or {}) - set(TOLERANCE_CONFIG)
        if unknown:
            raise UsageError(f"알 수 없는 허용치 키: {sorted(unknown)}")
        self.tolerances.update(tolerances or {})
        self.series_cfg = series_cfg
        self.quad_cfg = quad_cfg
        self.max_workers = max_workers or PARALLEL_CONFIG["MAX_WORKERS"]

        # 검사 통계
        self.stats = {
            'total_checks': 0,
            'passed_checks': 0,
            'failed_checks': 0,
            'errors': 0
        }
        self.interrupted = False

        logger.info(f"Master Theorem 검증기 초기화 완료 (시드 {self.seed}, 작업자 {self.max_workers})")

    # ------------------------------------------------------------------
    # 작업 구성

    def build_jobs(self, suite, spaces=None, hardy_spec=None):
        """
        검사 묶음의 작업 목록 생성

        Raises:
            UsageError: 알 수 없는 묶음, 공간, Hardy 문자열
        """
        if suite not in SUITES:
            raise UsageError(f"알 수 없는 검사 묶음: {suite} (사용 가능: {', '.join(SUITES)})")
        if suite == "classical":
            return self._classical_jobs(hardy_spec)
        if suite == "semisimple":
            names = spaces or SUITE_CONFIG["SEMISIMPLE_SPACES"]
            return [job for name in names for job in self._semisimple_jobs(name, hardy_spec or DEFAULT_HARDY)]
        names = spaces or SUITE_CONFIG["REDUCTIVE_SPACES"]
        return [self._reductive_job(name, hardy_spec or DEFAULT_HARDY) for name in names]

    def _classical_jobs(self, hardy_spec):
        specs = [hardy_spec] if hardy_spec else SUITE_CONFIG["CLASSICAL_HARDY"]
        jobs = []
        for spec in specs:
            a = parse_hardy_spec(spec)

            def run(a=a):
                return checks.classical_checks(a, tolerances=self.tolerances), {}, []

            jobs.append(VerificationJob(f"{CLASSICAL_SPACE}:{spec}", CLASSICAL_SPACE, a.describe(), run))
        return jobs

    def _hardy_for(self, space, hardy_spec):
        rho_max = float(max(space.datum.rho_coords))
        return parse_hardy_spec(hardy_spec, rank=space.rank, delta=1.0, rho_max=rho_max)

    def _semisimple_jobs(self, name, hardy_spec):
        space = load_space(name)
        a = self._hardy_for(space, hardy_spec)
        seed = self.seed
        tol = self.tolerances

        def structure():
            records = checks.normalization_checks(space, tol)
            records += checks.factorization_checks(space, seed, tolerances=tol)
            records += checks.dimension_checks(space, tolerances=tol)
            records += checks.residue_checks(space, tolerances=tol)
            records += checks.b_path_checks(space, seed + 1, tolerances=tol)
            records += checks.tube_checks(space, seed + 2)
            return records, {}, list(space.bfunction.findings)

        def decay():
            return checks.decay_checks(space, a, seed + 3), {}, []

        jobs = [
            VerificationJob(f"{name}:structure", name, a.describe(), structure),
            VerificationJob(f"{name}:decay", name, a.describe(), decay),
        ]
        if space.evaluator is None:
            logger.info(f"{name}: 구면 함수 평가기가 없어 1, 2, 3부 검사를 생략합니다")
            return jobs

        def spherical():
            return checks.spherical_checks(space, a, seed + 4), {}, []

        def series_contour():
            records = checks.series_contour_checks(space, a, self.series_cfg, self.quad_cfg, tol)
            return records, {"radius": space.radius(a)}, []

        def gamma():
            return checks.gamma_checks(space, a, seed + 5, self.series_cfg, tol), {}, []

        jobs += [
            VerificationJob(f"{name}:spherical", name, a.describe(), spherical),
            VerificationJob(f"{name}:series_contour", name, a.describe(), series_contour),
            VerificationJob(f"{name}:gamma", name, a.describe(), gamma),
        ]
        if space.rank != 1:
            return jobs

        def interpolation():
            records, calibration = checks.interpolation_checks(space, a, tol)
            finding = {"kind": "radial_constant", "space": name, **calibration}
            return records, calibration, [finding]

        def iteration():
            return checks.iteration_checks(space, a, tol), {}, []

        jobs += [
            VerificationJob(f"{name}:interpolation", name, a.describe(), interpolation),
            VerificationJob(f"{name}:iteration", name, a.describe(), iteration),
        ]
        if checks.oracle_supported(space):
            def oracle():
                return checks.oracle_checks(space, seed + 6, tolerances=tol), {}, []

            jobs.append(VerificationJob(f"{name}:oracle", name, a.describe(), oracle))
        return jobs

    def _reductive_job(self, name, hardy_spec):
        rspace = reductive_space(SUITE_CONFIG["TORUS_RANK"], load_space(name))
        semisimple = self._hardy_for(rspace.semisimple, hardy_spec)
        torus = [exp_decay(P=1.0) for _ in range(rspace.torus_rank)]
        a = product_hardy(torus, semisimple)

        def run():
            report = reductive_verify(rspace, a, cfg=self.series_cfg)
            return report.records, report.truncation, report.findings

        return VerificationJob(f"{rspace.name}:reductive", rspace.name, a.describe(), run)

    # ------------------------------------------------------------------
    # 실행

    def _run_job(self, job, stats_lock):
        """작업 하나 실행 (오류는 실패 기록으로 변환)"""
        report = VerificationReport(space=job.space, hardy=job.hardy)
        try:
            records, truncation, findings = job.run()
            report.extend(records)
            report.truncation.update(truncation)
            report.findings.extend(findings)
        except Exception as e:
            logger.error(f"작업 '{job.job_id}' 처리 중 오류: {e}", exc_info=True)
            report.add(checks.error_record(job.job_id.split(":", 1)[-1], e))
            with stats_lock:
                self.stats['errors'] += 1

        with stats_lock:
            failed = len(report.failures)
            self.stats['total_checks'] += len(report.records)
            self.stats['failed_checks'] += failed
            self.stats['passed_checks'] += len(report.records) - failed
        return report

    def verify(self, suite, spaces=None, hardy_spec=None, resume=False):
        """
        검사 묶음 실행 (안전하게 종료되는 병렬 처리)

        Args:
            suite: classical / semisimple / reductive
            spaces: 공간 이름 목록 (None 이면 SUITE_CONFIG 기본값)
            hardy_spec: Hardy 문자열 (None 이면 기본값)
            resume: 체크포인트의 완료 작업 건너뛰기

        Returns:
            list: 공간 이름 순으로 정렬한 VerificationReport 목록
        """
        jobs = self.build_jobs(suite, spaces, hardy_spec)
        logger.info(f"{suite} 검사 묶음: 작업 {len(jobs)}개")

        # 체크포인트 로드
        job_reports = {}
        checkpoint = load_checkpoint(suite, self.output_dir) if resume else None
        if checkpoint:
            known = {job.job_id for job in jobs}
            for job_id, data in checkpoint.get("records", {}).items():
                if job_id in known:
                    job_reports[job_id] = VerificationReport.from_dict(data)
            for key in self.stats:
                self.stats[key] = checkpoint.get(key, 0)
            logger.info(f"체크포인트에서 이어서 진행: 완료 작업 {len(job_reports)}개")

        pending = [job for job in jobs if job.job_id not in job_reports]
        if not pending:
            logger.info("처리할 새 작업이 없습니다. 모든 작업이 이미 완료되었습니다.")

        # 진행 상황 동기화를 위한 잠금
        stats_lock = threading.Lock()
        start_time = datetime.now()
        executor = None
        futures = {}

        try:
            effective_workers = max(1, min(self.max_workers, len(pending) or 1))
            logger.info(f"병렬 처리 작업자 수: {effective_workers}")
            executor = concurrent.futures.ThreadPoolExecutor(
                max_workers=effective_workers, thread_name_prefix=PARALLEL_CONFIG["THREAD_PREFIX"]
            )
            for job in pending:
                if is_shutdown_requested():
                    break
                futures[executor.submit(self._run_job, job, stats_lock)] = job

            with tqdm(total=len(pending), desc=f"{suite} 검사", unit="작업") as progress:
                while futures and not is_shutdown_requested():
                    done, _ = concurrent.futures.wait(
                        futures.keys(),
                        return_when=concurrent.futures.FIRST_COMPLETED,
                        timeout=PARALLEL_CONFIG["WAIT_TIMEOUT"]
                    )
                    if not done:
                        logger.debug("작업 완료 대기 중 타임아웃, 종료 요청 확인 중...")
                        continue

                    for future in done:
                        job = futures.pop(future)
                        try:
                            job_reports[job.job_id] = future.result()
                        except concurrent.futures.CancelledError:
                            logger.info(f"작업 '{job.job_id}' 이(가) 취소되었습니다.")
                            continue
                        progress.update(1)

                    save_checkpoint(
                        suite, list(job_reports),
                        {job_id: report.to_dict() for job_id, report in job_reports.items()},
                        self.stats, self.output_dir,
                    )

            if is_shutdown_requested():
                logger.info("종료 요청으로 남은 작업을 취소합니다.")
                self.interrupted = True
            else:
                logger.info("모든 작업이 완료되었습니다.")

        except KeyboardInterrupt:
            logger.info("키보드 인터럽트가 감지되었습니다. 작업을 종료합니다.")
            self.interrupted = True

        finally:
            # 미완료 작업 취소
            for future in list(futures):
                future.cancel()
            if executor:
                executor.shutdown(wait=not self.interrupted, cancel_futures=True)

            elapsed = (datetime.now() - start_time).total_seconds()
            logger.info(f"총 검사: {self.stats['total_checks']}건, 통과 {self.stats['passed_checks']}건, "
                        f"실패 {self.stats['failed_checks']}건, 오류 {self.stats['errors']}건 "
                        f"({elapsed:.1f}초)")

            # 모든 작업이 완료된 경우에만 체크포인트 파일 제거
            if not self.interrupted and len(job_reports) == len(jobs):
                clear_checkpoint(self.output_dir)

        return self.merge(jobs, job_reports)

    @staticmethod
    def merge(jobs, job_reports):
        """작업별 보고서를 공간별 보고서로 합치기 (검사 ID 순)"""
        merged = {}
        for job in jobs:
            report = job_reports.get(job.job_id)
            if report is None:
                continue
            target = merged.get(job.space)
            if target is None:
                target = merged[job.space] = VerificationReport(space=job.space, hardy=dict(report.hardy))
            elif target.hardy != report.hardy:
                names = {target.hardy.get("name"), report.hardy.get("name")}
                target.hardy = {"name": ", ".join(sorted(n for n in names if n))}
            target.records.extend(report.records)
            target.findings.extend(report.findings)
            kind = job.job_id.rsplit(":", 1)[-1]
            if report.truncation:
                target.truncation[kind] = report.truncation
        return [merged[name] for name in sorted(merged)]

    # ------------------------------------------------------------------
    # 출력

    def write_outputs(self, reports, report_path=None, csv_path=None, html_path=None):
        """
        JSON 보고서, CSV, HTML 저장

        Returns:
            dict: 형식 -> 경로 (실패한 형식은 None)
        """
        report_path = report_path or os.path.join(self.output_dir, FILE_CONFIG["REPORT_FILE"])
        csv_path = csv_path or os.path.join(self.output_dir, FILE_CONFIG["CSV_FILE"])
        html_path = html_path or os.path.join(self.output_dir, FILE_CONFIG["HTML_FILE"])

        paths = {
            "report": report_path if save_reports(reports, report_path) else None,
            "csv": export_to_csv(reports, csv_path),
            "html": None,
        }
        try:
            html_file = init_html_report(html_path)
            count = 0
            for report in reports:
                count = add_to_html_report(report, html_file, count)
            finalize_html_report(html_file)
            paths["html"] = html_file
        except OSError as e:
            logger.error(f"HTML 보고서 생성 중 오류: {e}")
        return paths

    @property
    def passed(self):
        return (not self.interrupted and self.stats['failed_checks'] == 0
                and self.stats['errors'] == 0 and self.stats['total_checks'] > 0)
