#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
대칭 공간 위의 Ramanujan Master Theorem 계산 및 검증 도구

이 스크립트는 공간 카탈로그 조회, c/b/d/φ/밀도 점별 계산, 격자 표 출력,
그리고 고전/반단순/환원 검사 묶음 실행을 제공합니다.
검사 결과는 JSON, CSV, HTML 보고서로 저장됩니다.

종료 코드: 0 모든 검사 통과, 1 검사 실패 또는 계산 오류, 2 사용법 오류
"""

import os
import sys
import argparse
import logging

import numpy as np
from colorama import Fore, Style, init as colorama_init
from dotenv import load_dotenv

from config.settings import FILE_CONFIG, QUAD_CONFIG, SERIES_CONFIG, TOLERANCE_CONFIG
from master.series import SeriesConfig
from master.space import load_space
from numerics.quadrature import QuadratureConfig
from roots.catalog import list_catalog_spaces, catalog_entry, build_catalog_space
from roots.root_system import DominantWeight
from spherical.radial import RadialPoint
from utils.errors import MasterTheoremError, UsageError, UnknownSpaceError, QuadratureConfigError
from utils.file_utils import write_table
from utils.safety import setup_signal_handlers, reset_shutdown
from verifier import MasterTheoremVerifier, SUITES

# .env 파일 로드
load_dotenv()

logger = logging.getLogger(__name__)

# 사용법 오류로 취급하는 예외 (종료 코드 2)
USAGE_ERRORS = (UsageError, UnknownSpaceError, QuadratureConfigError)
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    """오류 시 종료 대신 UsageError"""

    def error(self, message):
        raise UsageError(message)


def setup_logging(verbose_run, output_dir=None):
    """
    로깅 설정

    verify 는 파일 + 콘솔, 나머지 명령은 경고 이상만 콘솔(stderr)에 남깁니다.
    """
    if verbose_run:
        os.makedirs(output_dir, exist_ok=True)
        handlers = [
            logging.FileHandler(os.path.join(output_dir, FILE_CONFIG["LOG_FILE"]), encoding='utf-8'),
            logging.StreamHandler()
        ]
        level = getattr(logging, FILE_CONFIG["LOG_LEVEL"].upper(), logging.INFO)
    else:
        handlers = [logging.StreamHandler()]
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )


# ----------------------------------------------------------------------
# 인자 해석

def parse_complex_list(text):
    """'0.3+0.5j, 0.2' 또는 '0.3+0.5i' 형태의 쉼표 목록"""
    try:
        return np.array([complex(item.strip().replace("i", "j").replace(" ", ""))
                         for item in text.split(",")], dtype=complex)
    except ValueError:
        raise UsageError(f"복소수 목록을 해석할 수 없습니다: '{text}'")


def parse_int_list(text):
    try:
        return tuple(int(item) for item in text.split(","))
    except ValueError:
        raise UsageError(f"정수 목록을 해석할 수 없습니다: '{text}'")


def parse_tolerances(items):
    """--tol 값 목록: 'KEY=VALUE' 또는 숫자 하나 (SERIES_CONTOUR)"""
    tolerances = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            key, value = "SERIES_CONTOUR", item
        key = key.strip().upper()
        if key not in TOLERANCE_CONFIG:
            raise UsageError(f"알 수 없는 허용치 키: {key} (사용 가능: {', '.join(TOLERANCE_CONFIG)})")
        try:
            tolerances[key] = float(value)
        except ValueError:
            raise UsageError(f"허용치 값이 숫자가 아닙니다: '{item}'")
        if not tolerances[key] >= 0:
            raise UsageError(f"허용치는 0 이상이어야 합니다: '{item}'")
    return tolerances


def _require_rank(space, values, what):
    if len(values) != space.rank:
        raise UsageError(f"{space.name}: {what} 의 성분 수 {len(values)} ≠ 계수 {space.rank}")
    return values


def _radial(space, args):
    if args.t is not None:
        if space.rank != 1:
            raise UsageError("--t 는 계수 1 공간에서만 사용할 수 있습니다 (--h 사용)")
        return RadialPoint.from_t(args.t)
    if args.h is not None:
        return RadialPoint(tuple(_require_rank(space, parse_complex_list(args.h), "--h")))
    raise UsageError("phi 에는 --t 또는 --h 가 필요합니다")


def build_parser():
    parser = _ArgumentParser(prog="master_theorem",
                             description='대칭 공간 위의 Ramanujan Master Theorem 계산 및 검증 도구')
    sub = parser.add_subparsers(dest="command", required=True)

    catalog = sub.add_parser("catalog", help="공간 카탈로그 조회")
    catalog.add_argument("action", choices=["list", "show"])
    catalog.add_argument("name", nargs="?", help="show 할 공간 이름")

    evaluate = sub.add_parser("eval", help="점별 계산")
    evaluate.add_argument("quantity", choices=["c", "b", "d", "phi", "density"])
    evaluate.add_argument("--space", required=True, help="카탈로그 공간 이름")
    evaluate.add_argument("--lambda", dest="lam", help="λ (ω 좌표, 쉼표로 구분, 예: 0.3+0.5j)")
    evaluate.add_argument("--mu", help="지배 가중치 μ (쉼표로 구분한 정수)")
    evaluate.add_argument("--t", type=float, help="계수 1 동경 좌표 t = β(H)/2")
    evaluate.add_argument("--h", help="동경 점 h = ω_j(H) (쉼표로 구분)")

    tabulate = sub.add_parser("tabulate", help="허수축 방향 격자 표 (CSV)")
    tabulate.add_argument("quantity", choices=["c", "b", "density", "phi"])
    tabulate.add_argument("--space", required=True, help="카탈로그 공간 이름")
    tabulate.add_argument("--sigma", type=float, default=0.25, help="λ = (σ + iy)ρ 의 σ (기본값: 0.25)")
    tabulate.add_argument("--y-max", type=float, default=5.0, help="y 범위 [-y_max, y_max] (기본값: 5)")
    tabulate.add_argument("--steps", type=int, default=101, help="격자 점 수 (기본값: 101)")
    tabulate.add_argument("--t", type=float, default=1.0, help="phi 의 동경 좌표 t (계수 1, 기본값: 1)")
    tabulate.add_argument("--output", help="CSV 경로 (기본값: 표준 출력)")

    verify = sub.add_parser("verify", help="검사 묶음 실행")
    verify.add_argument("suite", choices=list(SUITES))
    verify.add_argument("--space", help="공간 이름 (쉼표로 구분, 기본값: 묶음 기본 공간)")
    verify.add_argument("--hardy", help="Hardy 함수 (예: exp:P=1, rgamma:P=2,A=1.7, box:P=1,R=2, zero)")
    verify.add_argument("--report", help="JSON 보고서 경로")
    verify.add_argument("--csv", help="CSV 경로")
    verify.add_argument("--html", help="HTML 보고서 경로")
    verify.add_argument("--resume", action="store_true", help="체크포인트에서 이어서 실행")
    verify.add_argument("--seed", type=int, help="표본 추출 시드")
    verify.add_argument("--tol", action="append", help="허용치 덮어쓰기 KEY=VALUE (숫자만 주면 SERIES_CONTOUR)")
    verify.add_argument("--max-height", type=int, help=f"급수 최대 높이 (기본값: {SERIES_CONFIG['MAX_HEIGHT']})")
    verify.add_argument("--quad-L", type=float, help="윤곽 절단 반폭 L (기본값: 인증서로 자동 선택)")
    verify.add_argument("--quad-nodes", type=int, help=f"패널당 노드 수 (기본값: {QUAD_CONFIG['NODES_PER_AXIS']})")
    verify.add_argument("--workers", type=int, help="병렬 작업자 수")
    verify.add_argument("--output-dir", default=FILE_CONFIG["OUTPUT_DIR"], help="출력 디렉토리")
    return parser


# ----------------------------------------------------------------------
# 명령

def cmd_catalog(args, out):
    if args.action == "list":
        rows = []
        for name in list_catalog_spaces():
            entry = catalog_entry(name)
            rows.append({"name": name, "family": entry["family"], "rank": entry["rank"],
                         "provenance": entry["provenance"]})
        write_table(out, ["name", "family", "rank", "provenance"], rows)
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog show 에는 공간 이름이 필요합니다")
    datum = build_catalog_space(args.name)
    for key, value in datum.describe().items():
        out.write(f"{key}: {value}\n")
    out.write(f"star_multiplicities: {[int(m) for m in datum.star_mult]}\n")
    out.write(f"omega_max: {datum.omega_max:.12g}\n")
    return EXIT_OK


def _format_complex(value):
    value = complex(value)
    return f"{value.real:.17g} {value.imag:+.17g}j"


def cmd_eval(args, out):
    space = load_space(args.space)
    if args.quantity == "d":
        if args.mu is None:
            raise UsageError("eval d 에는 --mu 가 필요합니다")
        mu = DominantWeight(_require_rank(space, parse_int_list(args.mu), "--mu"))
        out.write(f"{space.dimension.weyl_dim(mu)}\n")
        return EXIT_OK

    if args.lam is None:
        raise UsageError(f"eval {args.quantity} 에는 --lambda 가 필요합니다")
    lam = _require_rank(space, parse_complex_list(args.lam), "--lambda")
    if args.quantity == "c":
        value = space.cfunction(lam)
    elif args.quantity == "b":
        value = space.bfunction.b_eval(lam)
    elif args.quantity == "density":
        value = space.cfunction.density(lam)
    else:
        value = space.require_evaluator().phi(lam, _radial(space, args))
    out.write(_format_complex(value) + "\n")
    return EXIT_OK


def tabulate_rows(space, quantity, sigma, y_max, steps, t=1.0):
    """λ = (σ + iy)ρ 격자 위 값 (계산 실패 점은 nan)"""
    if steps < 2:
        raise UsageError(f"격자 점 수는 2 이상이어야 합니다: {steps}")
    rho = space.datum.rho_coords
    if quantity == "phi":
        evaluator = space.require_evaluator()
        radial = RadialPoint.from_t(t) if space.rank == 1 else RadialPoint(tuple(t * rho))
    functions = {
        "c": space.cfunction,
        "b": space.bfunction.b_eval,
        "density": space.cfunction.density,
        "phi": lambda lam: evaluator.phi(lam, radial),
    }
    function = functions[quantity]
    for y in np.linspace(-y_max, y_max, steps):
        lam = (sigma + 1j * y) * rho
        try:
            value = complex(function(lam))
        except MasterTheoremError as e:
            logger.warning(f"{space.name} {quantity} y={y:.6g}: {e}")
            value = complex(np.nan, np.nan)
        yield {"y": float(y), "re": value.real, "im": value.imag, "abs": abs(value)}


def cmd_tabulate(args, out):
    space = load_space(args.space)
    rows = tabulate_rows(space, args.quantity, args.sigma, args.y_max, args.steps, args.t)
    fields = ["y", "re", "im", "abs"]
    if args.output:
        directory = os.path.dirname(args.output)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(args.output, 'w', encoding='utf-8', newline='') as f:
            write_table(f, fields, rows)
    else:
        write_table(out, fields, rows)
    return EXIT_OK


def print_summary(reports, verifier, paths, out):
    """검사 결과 요약 출력 (색상)"""
    colorama_init(autoreset=True)
    out.write("\nMaster Theorem 검증 결과:\n")
    for report in reports:
        summary = report.summary()
        color = Fore.GREEN if report.passed else Fore.RED
        status = "통과" if report.passed else "실패"
        out.write(f"{color}[{status}]{Style.RESET_ALL} {summary['space']}: "
                  f"{summary['passed']}/{summary['checks']}\n")
        for record in report.failures:
            out.write(f"    {Fore.RED}{record.check_id} @ {record.point}: "
                      f"오차 {record.abs_err:.3e} (허용 {record.tolerance:.1e}) {record.note}\n")
    stats = verifier.stats
    out.write(f"총 검사: {stats['total_checks']}건, 통과 {stats['passed_checks']}건, "
              f"실패 {stats['failed_checks']}건, 오류 {stats['errors']}건\n")
    if verifier.interrupted:
        out.write(f"{Fore.YELLOW}중단됨: --resume 으로 이어서 실행할 수 있습니다\n")
    for kind, path in paths.items():
        if path:
            out.write(f"{kind}: {path}\n")


def cmd_verify(args, out):
    series_cfg = SeriesConfig(max_height=args.max_height) if args.max_height else None
    quad_cfg = None
    if args.quad_L is not None or args.quad_nodes is not None:
        quad_cfg = QuadratureConfig(
            truncation_halfwidth=args.quad_L if args.quad_L is not None else QUAD_CONFIG["TRUNCATION_HALFWIDTH"],
            nodes_per_axis=args.quad_nodes if args.quad_nodes is not None else QUAD_CONFIG["NODES_PER_AXIS"],
        )
    if args.workers is not None and args.workers < 1:
        raise UsageError(f"작업자 수는 1 이상이어야 합니다: {args.workers}")

    verifier = MasterTheoremVerifier(
        output_dir=args.output_dir,
        seed=args.seed,
        tolerances=parse_tolerances(args.tol),
        series_cfg=series_cfg,
        quad_cfg=quad_cfg,
        max_workers=args.workers,
    )
    spaces = [s.strip() for s in args.space.split(",")] if args.space else None
    if spaces and args.suite == "classical":
        raise UsageError("classical 묶음에는 --space 를 사용할 수 없습니다")

    reset_shutdown()
    setup_signal_handlers()
    reports = verifier.verify(args.suite, spaces, args.hardy, resume=args.resume)
    paths = verifier.write_outputs(reports, args.report, args.csv, args.html)
    print_summary(reports, verifier, paths, out)
    return EXIT_OK if verifier.passed and all(paths.values()) else EXIT_FAILED


COMMANDS = {
    "catalog": cmd_catalog,
    "eval": cmd_eval,
    "tabulate": cmd_tabulate,
    "verify": cmd_verify,
}


def run(argv=None, out=None):
    """
    명령행 실행

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])
        out: 결과 출력 스트림 (기본값: 표준 출력)

    Returns:
        int: 종료 코드
    """
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        setup_logging(args.command == "verify", getattr(args, "output_dir", None))
        return COMMANDS[args.command](args, out)
    except USAGE_ERRORS as e:
        print(f"사용법 오류: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MasterTheoremError as e:
        logger.error(f"계산 오류: {e}")
        print(f"오류: {e}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as e:
        logger.error(f"실행 중 오류 발생: {e}", exc_info=True)
        print(f"오류 발생: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(run())
