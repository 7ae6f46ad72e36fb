#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
검사 묶음을 이루는 개별 검사

각 함수는 공간 하나와 Hardy 함수 하나에 대해 CheckRecord 목록을 돌려줍니다.
표본이 많은 검사(인수분해, b 경로, 튜브 등)는 최대 오차 점 하나만 기록합니다.
"""

import logging

import numpy as np

from bfunction.decay import pi_b_bound_check, b_over_cc_bound_check, a_tilde_bound_check
from bfunction.residues import residue_check
from config.settings import TOLERANCE_CONFIG, SAMPLING_CONFIG, SUITE_CONFIG
from hardy.hardy import check_certificate
from master.classical import classical_series, classical_contour, classical_interpolate
from master.contour import contour_f
from master.contour_iteration import contour_iteration
from master.interpolation import (
    radial_profile, interpolate_symm, l2_identity, holomorphy_probe, interpolation_grid, calibrate
)
from master.report import CheckRecord, make_record
from master.series import series_f
from master.variants import gamma_variants
from roots.tubes import weyl_tube_intersections
from spherical.bounds import opdam_bound_check, psi_bound_check
from spherical.compact import psi_compact, su2_character
from spherical.oracle import phi_oracle_rank1, model_for
from spherical.radial import RadialPoint
from spherical.rank_one import phi_rank1
from utils.errors import UnsupportedSpaceError

# 로거 설정
logger = logging.getLogger(__name__)

# 극 판정: 두 거리에서의 |b| 비가 이 값을 넘으면 관찰된 극
POLE_RATIO = 30.0
POLE_OFFSETS = (1e-6, 1e-3)
# 계수 2 이상 공간의 급수 = 윤곽 비교 방향과 gamma 검사 점
GENERIC_DIRECTION = (1.0, 0.5)
RANK_TWO_POINTS = [[0.1 + 0.4j, 0.05 + 0.7j], [0.12 - 0.3j, 0.2 + 0.9j]]


def _sl3_dim(mu):
    a, b = mu
    return ((a + 1) * (b + 1) * (a + b + 2) // 2) ** 2


# 독립적으로 알려진 차원 공식
DIMENSION_ORACLES = {
    "H3": lambda mu: (mu[0] + 1) ** 2,
    "A2C": _sl3_dim,
}


def error_record(check_id, exc):
    """계산 오류를 실패 기록으로 변환"""
    return CheckRecord(
        check_id=f"{check_id}.error", point="-", lhs=0j, rhs=0j,
        abs_err=float("inf"), rel_err=float("inf"), tolerance=0.0,
        metric="abs", passed=False, note=f"{type(exc).__name__}: {exc}",
    )


def count_record(check_id, point, count, note=""):
    """위반 개수 기록 (0 이어야 통과)"""
    return make_record(check_id, point, float(count), 0.0, 0.0, metric="abs", note=note)


def worst_record(check_id, points, lhs, rhs, tolerance, metric="rel"):
    """표본 중 상대 오차가 가장 큰 점 하나의 기록"""
    lhs = np.asarray(lhs, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    errors = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), 1e-300)
    worst = int(np.argmax(errors))
    point = np.round(np.asarray(points)[worst], 6).tolist()
    return make_record(check_id, point, lhs[worst], rhs[worst], tolerance, metric=metric,
                       note=f"{len(lhs)}점 중 최대 오차")


def _generic_points(rank, n_points, seed, real=2.0, imag=4.0):
    rng = np.random.default_rng(seed)
    return rng.uniform(-real, real, (n_points, rank)) + 1j * rng.uniform(-imag, imag, (n_points, rank))


def radial_points(space, a, n_points=None):
    """‖H‖ ≤ 0.5·P/Ω 인 동경 점 (계수 2 이상은 원점과 일반 점 하나)"""
    limit = SUITE_CONFIG["RADIUS_FRACTION"] * space.radius(a)
    if space.rank == 1:
        n_points = n_points or SUITE_CONFIG["RADIAL_POINTS"]
        return [RadialPoint((limit * k / (n_points - 1),)) for k in range(n_points)]
    direction = np.array(GENERIC_DIRECTION[:space.rank])
    direction = direction / space.datum.radial_norm(direction)
    return [RadialPoint(tuple(np.zeros(space.rank))), RadialPoint(tuple(0.6 * limit * direction))]


# ----------------------------------------------------------------------
# 고전 정리

def classical_checks(a, lambdas=None, xs=None, sigmas=None, tolerances=None):
    """고전 보간, 감마 형태, 급수 = 윤곽, σ 독립성"""
    tol = tolerances or TOLERANCE_CONFIG
    lambdas = lambdas or SUITE_CONFIG["CLASSICAL_LAMBDA"]
    xs = xs or SUITE_CONFIG["CLASSICAL_X"]
    sigmas = sigmas or SUITE_CONFIG["CLASSICAL_SIGMA"]
    records = []
    for lam in lambdas:
        result = classical_interpolate(a, lam)
        label = f"{a.name} λ={complex(lam)}"
        records.append(make_record("classical.interpolation", label, result.lhs, result.rhs, tol["CLASSICAL"]))
        records.append(make_record("classical.gamma", label, result.lhs, result.rhs_gamma, tol["CLASSICAL"]))

    for x in xs:
        if x >= np.exp(a.certificate.P):
            continue
        label = f"{a.name} x={x}"
        records.append(make_record("classical.series_contour", label,
                                   classical_series(a, x), classical_contour(a, x), tol["CLASSICAL"]))

    values = [classical_contour(a, xs[-1], sigma) for sigma in sigmas]
    spread = max(abs(v - values[0]) for v in values)
    records.append(make_record("classical.sigma_spread", f"{a.name} σ={sigmas}", spread, 0.0,
                               tol["SIGMA_SPREAD"], metric="abs"))
    return records


# ----------------------------------------------------------------------
# 구조 검사 (c, 밀도, d, 유수, b, 튜브)

def normalization_checks(space, tolerances=None):
    tol = tolerances or TOLERANCE_CONFIG
    value = space.cfunction(space.datum.rho_coords)
    return [make_record("c.normalization", "ρ", value, 1.0, tol["NORMALIZATION"], metric="abs")]


def factorization_checks(space, seed, n_points=None, tolerances=None):
    """감마 경로 밀도와 인수분해 밀도"""
    tol = tolerances or TOLERANCE_CONFIG
    n_points = n_points or SUITE_CONFIG["FACTORIZATION_POINTS"]
    points = _generic_points(space.rank, n_points, seed)
    gamma_route = space.cfunction.density(points)
    factored = space.factors.density_factored(points, space.cfunction.c0)
    return [worst_record("plancherel.factorization", points, factored, gamma_route, tol["FACTORIZATION"])]


def dimension_checks(space, max_height=None, limit_height=None, tolerances=None):
    """d(μ) 정수성, 양수성, 독립 공식, 극한 경로"""
    tol = tolerances or TOLERANCE_CONFIG
    max_height = max_height or SUITE_CONFIG["DIMENSION_HEIGHT"]
    limit_height = limit_height or SUITE_CONFIG["RESIDUE_HEIGHT"]
    weights = space.datum.dominant_weights(max_height)
    dims = [space.dimension.weyl_dim(mu) for mu in weights]

    records = [count_record("dimension.positive", f"|μ|≤{max_height}", sum(d <= 0 for d in dims))]
    oracle = DIMENSION_ORACLES.get(space.name)
    if oracle is not None:
        mismatches = sum(d != oracle(mu.coords) for mu, d in zip(weights, dims))
        records.append(count_record("dimension.oracle", f"|μ|≤{max_height}", mismatches))

    for mu, d in zip(weights, dims):
        if mu.height > limit_height:
            break
        value, residual = space.dimension.lemma_limit(space.cfunction, mu)
        records.append(make_record("dimension.limit", str(mu), value, d, tol["DIMENSION_LIMIT"], metric="rel",
                                   note=f"외삽 잔차 {residual:.1e}"))
    return records


def residue_checks(space, max_height=None, tolerances=None):
    tol = tolerances or TOLERANCE_CONFIG
    max_height = max_height or SUITE_CONFIG["RESIDUE_HEIGHT"]
    records = []
    for mu in space.datum.dominant_weights(max_height):
        result = residue_check(space.bfunction, mu)
        records.append(make_record("bfunction.residue", str(mu), result.ratio, 1.0, tol["RESIDUE"], metric="abs"))
    return records


def pole_lattice_mismatches(space, probes=None):
    """
    첫 좌표를 실수 1/4 격자 위에 두고 예측한 b 극과 실제 발산을 비교

    Returns:
        tuple: (불일치 개수, 검사 점 개수)
    """
    bfunction = space.bfunction
    rank = space.rank
    tail = np.array([0.37 + 0.61j, 0.23 - 0.83j][:rank - 1], dtype=complex)
    probes = probes if probes is not None else [k / 4.0 for k in range(-8, 9)]
    direction = np.zeros(rank, dtype=complex)
    direction[0] = 1.0
    mismatches = 0
    for x in probes:
        point = np.concatenate([[complex(x)], tail])
        predicted = bool(bfunction.is_pole(point))
        near, far = (abs(bfunction.b_via_density(point + eps * direction)) for eps in POLE_OFFSETS)
        observed = near > POLE_RATIO * far
        if predicted != observed:
            logger.warning(f"{space.name}: λ₁={x} 극 판정 불일치 (예측 {predicted}, 관찰 {observed})")
            mismatches += 1
    return mismatches, len(probes)


def b_path_checks(space, seed, n_points=None, tolerances=None):
    """명시 형태 b 와 밀도 경로 b 비교, 극 격자 판정"""
    tol = tolerances or TOLERANCE_CONFIG
    n_points = n_points or SAMPLING_CONFIG["GENERIC_POINTS"]
    points = _generic_points(space.rank, n_points, seed, real=1.5, imag=3.0)
    explicit = space.bfunction.b_explicit(points)
    via_density = space.bfunction.b_via_density(points)
    mismatches, probes = pole_lattice_mismatches(space)
    return [
        worst_record("bfunction.paths", points, explicit, via_density, tol["B_PATHS"]),
        count_record("bfunction.pole_lattice", f"{probes}점", mismatches),
    ]


def tube_checks(space, seed, deltas=(0.3, 1.0), n_points=None):
    """T_δ 와 ∩_w w(T″_δ), ∩_w w(T′_δ) 의 소속 일치"""
    n_points = n_points or SAMPLING_CONFIG["TUBE_SAMPLES"]
    datum = space.datum
    rng = np.random.default_rng(seed)
    records = []
    for delta in deltas:
        bound = 1.5 * delta * float(np.max(datum.rho_coords))
        coords = rng.uniform(-bound, bound, (n_points, datum.rank)) + 1j * rng.uniform(-1.0, 1.0, (n_points, datum.rank))
        masks = weyl_tube_intersections(datum, coords, delta)
        inside = int(np.sum(masks["T"]))
        for key in ("double_prime", "prime"):
            mismatches = int(np.sum(masks["T"] != masks[key]))
            records.append(count_record(f"roots.tube_{key}", f"δ={delta}", mismatches,
                                        note=f"T_δ 안 {inside}/{n_points}"))
    return records


# ----------------------------------------------------------------------
# 감쇠 상한

def _fit_record(check_id, fit):
    return count_record(check_id, f"{fit.check_points}점", fit.violations,
                        note=f"C={fit.constant:.3e}, 최대 비율 {fit.max_ratio:.4f}")


def decay_checks(space, a, seed, n_points=None):
    n_points = n_points or SAMPLING_CONFIG["DECAY_POINTS"]
    cert = a.certificate
    return [
        _fit_record("decay.pi_b", pi_b_bound_check(space.bfunction, n_points, seed)),
        _fit_record("decay.b_over_cc", b_over_cc_bound_check(space.bfunction, cert.delta, n_points, seed)),
        _fit_record("decay.a_tilde", a_tilde_bound_check(space.bfunction, a, n_points, seed)),
    ]


def spherical_checks(space, a, seed):
    """구면 함수 자체 검사, Opdam 상한, ψ 상한, Hardy 인증서, SU(2) 쌍대"""
    evaluator = space.require_evaluator()
    evaluator.self_check(seed=seed)
    certificate = check_certificate(a, seed=seed, datum=space.datum)
    records = [
        make_record("spherical.self_check", evaluator.mode, 1.0, 1.0, 0.0, metric="abs"),
        _fit_record("spherical.opdam", opdam_bound_check(evaluator, seed=seed)),
        _fit_record("spherical.psi", psi_bound_check(evaluator, seed=seed)),
        count_record("hardy.certificate", f"{certificate.samples}점", certificate.violations,
                     note=f"최대 비율 {certificate.max_ratio:.4f}"),
    ]
    if space.rank == 1 and space.datum.is_complex_case:
        records.append(compact_dual_record(evaluator, seed))
    return records


def compact_dual_record(evaluator, seed, n_points=12, tolerances=None):
    """계수 1 복소 경우: ψ_k(exp iX) 와 SU(2) 지표 sin((k+1)x) / ((k+1) sin x)"""
    tol = tolerances or TOLERANCE_CONFIG
    rng = np.random.default_rng(seed)
    ks = rng.integers(0, 8, n_points)
    xs = rng.uniform(0.05, 0.5 * np.pi, n_points)
    psi = [psi_compact(evaluator, (int(k),), [x]) for k, x in zip(ks, xs)]
    characters = [su2_character(int(k), x) for k, x in zip(ks, xs)]
    return worst_record("spherical.compact_dual", np.stack([ks, xs], axis=1), psi, characters, tol["ORACLE"],
                        metric="abs")


def oracle_checks(space, seed, n_points=None, tolerances=None):
    """계수 1 닫힌 형태 φ 와 Iwasawa 적분"""
    tol = tolerances or TOLERANCE_CONFIG
    n_points = n_points or SUITE_CONFIG["ORACLE_SAMPLES"]
    model = model_for(space.datum)
    rng = np.random.default_rng(seed)
    lam = rng.uniform(0.1, 2.0, n_points) + 1j * rng.uniform(-3.0, 3.0, n_points)
    t = rng.uniform(0.05, 2.0, n_points)
    closed = np.array([phi_rank1(space.datum, l, s) for l, s in zip(lam, t)])
    oracle = np.array([phi_oracle_rank1(l, s, model) for l, s in zip(lam, t)])
    return [worst_record("spherical.oracle", np.stack([lam, t], axis=1), closed, oracle, tol["ORACLE"])]


# ----------------------------------------------------------------------
# 정리의 세 부분

def series_contour_checks(space, a, series_cfg=None, quad_cfg=None, tolerances=None):
    """1부 = 2부, σ 독립성, 비대칭화 형태"""
    tol = tolerances or TOLERANCE_CONFIG
    records = []
    points = radial_points(space, a)
    for radial in points:
        series = series_f(space, a, radial, series_cfg)
        contour = contour_f(space, a, radial, cfg=quad_cfg)
        records.append(make_record("master.series_contour", str(radial), series.value, contour.value,
                                   tol["SERIES_CONTOUR"],
                                   note=f"높이 {series.height}, L={contour.halfwidth:g}"))

    if space.rank == 1:
        radial = points[len(points) // 3]
        shift = 0.25 * a.certificate.delta * float(space.datum.rho_coords[0])
        values = [contour_f(space, a, radial, sigma=[s], cfg=quad_cfg).value for s in (0.0, shift, -shift)]
        spread = max(abs(v - values[0]) for v in values)
        records.append(make_record("master.sigma_spread", str(radial), spread, 0.0,
                                   tol["SIGMA_SPREAD"], metric="abs"))
        unsymmetrized = contour_f(space, a, radial, sigma=[-shift], cfg=quad_cfg, symmetrized=False).value
        records.append(make_record("master.unsymmetrized", str(radial), unsymmetrized, values[0],
                                   tol["SERIES_CONTOUR"]))
    return records


def interpolation_checks(space, a, tolerances=None):
    """
    계수 1 보간 항등식 (20점), L² 항등식, 정칙성 차분

    Returns:
        tuple: (기록 목록, 보정 정보)
    """
    tol = tolerances or TOLERANCE_CONFIG
    kappa, lam_star = calibrate(space)
    profile = radial_profile(space, a)
    grid = interpolation_grid(space, a.certificate.delta)
    records = []
    for lam in grid:
        result = interpolate_symm(space, a, lam, profile)
        records.append(make_record("interpolation.ratio", f"λ={lam}", result.ratio, 1.0,
                                   tol["INTERPOLATION"], metric="abs", note=f"절단 t={result.cut:.3g}"))

    lhs, rhs = l2_identity(space, a, profile)
    records.append(make_record("interpolation.l2", "iℝ", lhs, rhs, tol["L2"], metric="rel"))

    for lam in [g for g in grid if g.imag == 0.5][:2]:
        probe = holomorphy_probe(space, a, lam, profile=profile)
        for direction, (lhs_diff, rhs_diff) in probe.items():
            records.append(make_record(f"interpolation.holomorphy_{direction}", f"λ={lam}",
                                       lhs_diff, rhs_diff, tol["HOLOMORPHY"]))
    return records, {"kappa": kappa, "lambda_star": lam_star}


def gamma_checks(space, a, seed, series_cfg=None, tolerances=None):
    """감마 형태와 짝수 가중치 형태"""
    tol = tolerances or TOLERANCE_CONFIG
    if space.rank == 1:
        points = [g for g in interpolation_grid(space, a.certificate.delta) if g.imag != 0][:3]
    else:
        points = RANK_TWO_POINTS
    result = gamma_variants(space, a, points, cfg=series_cfg, seed=seed)
    records = [
        make_record("gamma.identity", "AB=ab", result.identity_error, 0.0, tol["IDENTITY"], metric="abs"),
        make_record("gamma.tilde_identity", "ÃB̃=ab", result.tilde_identity_error, 0.0, tol["IDENTITY"], metric="abs"),
        make_record("gamma.F_series", "H=0", result.F_series, result.f_series, tol["SERIES_CONTOUR"]),
        make_record("gamma.tilde_series", "H=0", result.tilde_series, result.parity_series, tol["SERIES_CONTOUR"]),
        make_record("gamma.odd_coefficients", "2ν", float(result.odd_coefficients_zero), 1.0, 0.0, metric="abs"),
    ]
    for lam, plain, gamma_sum, tilde_sum in result.interpolation:
        records.append(make_record("gamma.interpolation_AB", f"λ={lam}", gamma_sum, plain, tol["IDENTITY"]))
        records.append(make_record("gamma.interpolation_tilde", f"λ={lam}", tilde_sum, plain, tol["IDENTITY"]))
    return records


def iteration_checks(space, a, tolerances=None):
    """직사각형 윤곽 반복 (계수 1, H = 0)"""
    tol = tolerances or TOLERANCE_CONFIG
    result = contour_iteration(space, a, [0.0])
    records = [
        make_record("iteration.residue", f"N={n}", loop, -s_n, tol["RESIDUE"])
        for n, loop, s_n in zip(result.orders, result.closed_integrals, result.partial_sums)
    ]
    records.append(make_record("iteration.monotone", f"{result.tail_start}≤N≤{result.orders[-1]}",
                               float(result.monotone), 1.0, 0.0, metric="abs"))
    # a 가 더 빨리 감쇠하면 기울기는 ΩH-P 보다 작음
    excess = max(0.0, result.error_rate - result.expected_error_rate)
    records.append(make_record("iteration.error_rate", f"ΩH-P={result.expected_error_rate:.3f}", excess, 0.0,
                               tol["RATE"], metric="abs", note=f"오차 기울기 {result.error_rate:.3f}"))
    records.append(make_record("iteration.side_slope", "Im λ", result.side_slope, result.expected_side_slope,
                               tol["SLOPE"], metric="rel"))
    return records


def oracle_supported(space):
    try:
        model_for(space.datum)
        return True
    except UnsupportedSpaceError:
        return False
