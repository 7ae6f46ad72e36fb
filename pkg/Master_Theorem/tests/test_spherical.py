#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
구면 함수 평가기 테스트
"""

import numpy as np
import pytest
from scipy import special

from master.space import load_space
from spherical.bounds import opdam_bound_check, psi_bound_check
from spherical.compact import psi_compact, su2_character
from spherical.complex_case import ComplexCasePhi, phi_complex
from spherical.evaluator import ORACLE, RANK_ONE, SphericalEvaluator, default_mode
from spherical.oracle import COMPLEX_MODEL, SPLIT_MODEL, model_for, phi_oracle_rank1
from spherical.radial import RadialPoint
from spherical.rank_one import phi_rank1
from utils.errors import ContinuationDomainError, UnsupportedSpaceError


def _phi_h3(lam, t):
    return np.sinh(2.0 * lam * t) / (lam * np.sinh(2.0 * t))


@pytest.mark.parametrize("lam", [0.3 + 0.5j, 1.7, 2.0 + 3.0j, -0.4 + 1.0j])
@pytest.mark.parametrize("t", [0.2, 0.9, 2.5])
def test_complex_rank_one_closed_form(h3, lam, t):
    expected = _phi_h3(lam, t)
    assert abs(h3.evaluator.phi_t([lam], t) - expected) < 1e-10 * max(1.0, abs(expected))


@pytest.mark.parametrize("lam", [0.2, 0.75, 1.4])
@pytest.mark.parametrize("t", [0.3, 0.8, 1.6])
def test_rank_one_against_scipy(h2, ch2, lam, t):
    z = -np.sinh(t) ** 2
    expected = special.hyp2f1(0.5 + lam, 0.5 - lam, 1.0, z)
    assert abs(phi_rank1(h2.datum, lam, t) - expected) < 1e-10 * max(1.0, abs(expected))
    expected = special.hyp2f1(1.0 + lam, 1.0 - lam, 2.0, z)
    assert abs(phi_rank1(ch2.datum, lam, t) - expected) < 1e-10 * max(1.0, abs(expected))


@pytest.mark.parametrize("name,model", [("H2", SPLIT_MODEL), ("H3", COMPLEX_MODEL)])
def test_iwasawa_oracle_agrees(name, model):
    space = load_space(name)
    assert model_for(space.datum) == model
    lam = np.array([0.3 + 0.7j, 1.1, 0.05 - 2.0j])
    for t in (0.25, 0.8, 1.5):
        oracle = phi_oracle_rank1(lam, t, model)
        closed = space.evaluator.phi_t(lam[:, None], t)
        np.testing.assert_allclose(oracle, closed, rtol=1e-9)


def test_oracle_mode_evaluator(h2):
    evaluator = SphericalEvaluator(h2.datum, mode=ORACLE)
    value = evaluator.phi_t([0.4 + 0.3j], 0.7)
    assert abs(value - h2.evaluator.phi_t([0.4 + 0.3j], 0.7)) < 1e-9


def test_unsupported_modes(ch2):
    with pytest.raises(UnsupportedSpaceError):
        model_for(ch2.datum)
    with pytest.raises(UnsupportedSpaceError):
        SphericalEvaluator(ch2.datum, mode="series")
    with pytest.raises(UnsupportedSpaceError):
        ComplexCasePhi(ch2.datum)
    a2r = load_space("A2R")
    with pytest.raises(UnsupportedSpaceError):
        default_mode(a2r.datum)
    assert a2r.evaluator is None
    with pytest.raises(UnsupportedSpaceError):
        a2r.require_evaluator()


def test_default_modes(h3, a2c):
    assert default_mode(h3.datum) == RANK_ONE
    assert a2c.evaluator.mode == "complex-case"


def test_complex_case_matches_rank_one(h3):
    backend = ComplexCasePhi(h3.datum)
    lam = np.array([[0.3 + 0.5j], [1.2 - 0.4j]])
    for t in (0.4, 1.3):
        np.testing.assert_allclose(backend(lam, np.array([2.0 * t])), _phi_h3(lam[:, 0], t), rtol=1e-12)


def test_complex_case_normalization_and_invariance(a2c, rng):
    datum = a2c.datum
    for h in rng.uniform(-1.5, 1.5, (5, 2)):
        assert abs(phi_complex(datum, datum.rho_coords, h) - 1.0) < 1e-10
        lam = np.array([0.4 + 0.9j, 0.7 - 0.3j])
        values = [phi_complex(datum, image, h) for image in datum.orbit_coords(lam)]
        assert max(abs(v - values[0]) for v in values) < 1e-10 * max(1.0, abs(values[0]))
    assert phi_complex(datum, [0.3, 0.2j], np.zeros(2)) == 1.0


def test_complex_case_singular_points(a2c):
    datum = a2c.datum
    # λ 벽 위와 H 벽 위는 외삽으로, 근방 값과 연속
    on_wall = phi_complex(datum, [0.0, 0.6 + 0.2j], [0.8, 0.5])
    near = phi_complex(datum, [1e-5, 0.6 + 0.2j], [0.8, 0.5])
    assert abs(on_wall - near) < 1e-4 * max(1.0, abs(on_wall))
    on_wall = phi_complex(datum, [0.4 + 0.1j, 0.3], [1.0, 0.0])
    near = phi_complex(datum, [0.4 + 0.1j, 0.3], [1.0, 1e-5])
    assert abs(on_wall - near) < 1e-4 * max(1.0, abs(on_wall))


def test_radial_point(h3):
    point = RadialPoint.from_t(0.7)
    assert point.h == (1.4 + 0j,)
    assert point.t == pytest.approx(0.7)
    assert point.is_real
    assert RadialPoint.compact([1.0]).in_closed_omega_pi(h3.datum)
    assert not RadialPoint.compact([1.7]).in_closed_omega_pi(h3.datum)


# ----------------------------------------------------------------------
# 콤팩트 쌍대

@pytest.mark.parametrize("k", [0, 1, 3, 6])
@pytest.mark.parametrize("x", [0.2, 0.9, np.pi / 2])
def test_compact_dual_is_su2_character(h3, k, x):
    value = psi_compact(h3.evaluator, (k,), [x])
    assert abs(value - su2_character(k, x)) < 1e-10


def test_compact_continuation_domain(h3):
    with pytest.raises(ContinuationDomainError):
        psi_compact(h3.evaluator, (1,), [2.0])


def test_su2_character_at_identity():
    assert su2_character(4, 0.0) == 1.0


# ----------------------------------------------------------------------
# 증가 상한

@pytest.mark.parametrize("name", ["H2", "H3", "CH2"])
def test_growth_bounds(name):
    evaluator = load_space(name).require_evaluator()
    assert opdam_bound_check(evaluator, n_points=120, seed=2).passed
    assert psi_bound_check(evaluator, max_height=3, n_points=20, seed=2).passed


def test_psi_bound_complex_rank_two(a2c):
    result = psi_bound_check(a2c.evaluator, max_height=2, n_points=10, seed=1)
    assert result.passed
    assert result.max_ratio <= 1.0 + 1e-10


@pytest.mark.parametrize("lam", [
    [1e-4, 0.6 + 12.0j],
    [0.3 + 8.0j, 1e-4 - 0.2j],
    [0.2 + 20.0j, -0.2 - 20.0j + 2e-4],
])
def test_complex_case_near_wall_at_generic_h(a2c, lam):
    datum = a2c.datum
    h = np.array([0.2, 0.1])
    value = phi_complex(datum, lam, h)
    # 벽에서 떨어진 두 점의 평균으로 비교 (φ 는 λ 의 정함수)
    direction = np.array([0.3, -0.7 + 0.2j])
    shifted = [phi_complex(datum, np.asarray(lam) + s * 0.05 * direction, h) for s in (1.0, -1.0)]
    second_order = 0.5 * (shifted[0] + shifted[1])
    assert np.isfinite(value)
    assert abs(value - second_order) < 1e-2 * max(1.0, abs(value))


def test_complex_case_h_wall_continuity(a2c):
    # H 벽 위 값은 벽 양쪽 평균과 일치
    backend = ComplexCasePhi(a2c.datum)
    lam = np.array([[0.4 + 1.5j, 0.9 - 0.3j]])
    h = np.array([0.5, 0.2])
    direct = backend._direct(lam, h)
    wall_h = np.array([0.5, 1e-5])
    around = 0.5 * (backend(lam, np.array([0.5, 2e-3]))[0] + backend(lam, np.array([0.5, -2e-3]))[0])
    assert abs(backend(lam, wall_h)[0] - around) < 1e-4 * abs(around)
    assert abs(backend(lam, h)[0] - direct[0]) < 1e-12 * abs(direct[0])
