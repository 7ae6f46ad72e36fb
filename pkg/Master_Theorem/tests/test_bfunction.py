#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
b 함수, 대칭화 ã, 유수 조건, 감쇠 상한 테스트
"""

import logging

import numpy as np
import pytest

import bfunction.bfunction as bfunction_module
from bfunction.bfunction import BFunction
from bfunction.decay import b_over_cc_bound_check, pi_b_bound_check, a_tilde_bound_check
from bfunction.residues import residue_check
from bfunction.symmetrize import a_tilde, contour_integrand_factor, unsymmetrized_factor
from master.space import load_space
from utils.errors import DomainViolationError, PoleProximityError


def _b_h3(lam):
    return 0.5j / np.sin(np.pi * lam)


def test_rank_one_complex_closed_form(h3):
    bf = h3.bfunction
    for lam in (0.3 + 0.4j, -0.7 + 2.0j, 0.5):
        assert abs(bf.b_eval([lam]) - _b_h3(lam)) < 1e-12 * abs(_b_h3(lam))
        expected = -0.5j * lam ** 2 / np.sin(np.pi * lam)
        assert abs(bf.b_over_cc([lam]) - expected) < 1e-12 * abs(expected)


def test_constant_finding_recorded(h3):
    bf = h3.bfunction
    assert bf.K_b == pytest.approx(-0.5j)
    (finding,) = bf.findings
    assert finding["kind"] == "K_b_constant"
    assert finding["ratio"] == pytest.approx((4.0 * np.pi) ** 2)


def test_constant_mismatch_warns_once(h3, caplog, monkeypatch):
    monkeypatch.setattr(bfunction_module, "_reported", set())
    caplog.set_level(logging.DEBUG, logger="bfunction.bfunction")
    first = BFunction(h3.datum)
    second = BFunction(h3.datum)
    warnings = [r for r in caplog.records if r.levelno == logging.WARNING and "K_b" in r.getMessage()]
    repeats = [r for r in caplog.records if r.levelno == logging.DEBUG and "K_b" in r.getMessage()]
    assert len(warnings) == 1
    assert len(repeats) == 1
    assert first.findings[0]["kind"] == second.findings[0]["kind"] == "K_b_constant"


@pytest.mark.parametrize("name", ["H2", "H3", "H5", "CH2", "HH2", "A2C", "A2R", "SU24"])
def test_three_paths_agree(name, rng):
    bf = load_space(name).bfunction
    rank = bf.datum.rank
    coords = rng.uniform(-0.45, 0.45, (30, rank)) + 1j * rng.uniform(0.3, 3.0, (30, rank))
    coords = coords[~bf.is_pole(coords)]
    via_t = bf.b_eval(coords)
    explicit = bf.b_explicit(coords)
    via_density = bf.b_via_density(coords)
    np.testing.assert_allclose(explicit, via_t, rtol=1e-9)
    np.testing.assert_allclose(via_density, via_t, rtol=1e-8)


def test_removable_point_uses_explicit_form(h2):
    # 경우 (b): T(λ) = tan(π(λ-1/2)) 가 sin(π(λ-ρ)) 의 영점을 지움
    bf = h2.bfunction
    at_point = bf.b_eval([0.5])
    assert np.isfinite(at_point)
    assert abs(at_point - bf.b_explicit([0.5])) < 1e-12 * abs(at_point)
    nearby = bf.b_eval([0.5 + 1e-4])
    assert abs(at_point - nearby) < 1e-3 * abs(at_point)


def test_pole_guard(h3, ch2):
    with pytest.raises(PoleProximityError) as info:
        h3.bfunction.b_eval([2.0])
    assert info.value.distance < 1e-8
    # 경우 (d) 는 반정수 격자
    assert ch2.bfunction.is_pole(np.array([[0.5]]))[0]
    assert not ch2.bfunction.is_pole(np.array([[1.0]]))[0]


def test_b_over_cc_removable_zero(h3):
    # λ² 가 sin 의 영점을 지움
    assert abs(h3.bfunction.b_over_cc([0.0])) < 1e-15
    with pytest.raises(PoleProximityError):
        h3.bfunction.b_over_cc([1.0])


@pytest.mark.parametrize("name,mus", [
    ("H2", [(0,), (1,), (4,)]),
    ("H3", [(0,), (2,), (5,)]),
    ("CH2", [(0,), (1,), (3,)]),
    ("HH2", [(0,), (2,)]),
    ("A2C", [(0, 0), (1, 0), (1, 2)]),
    ("A2R", [(0, 0), (2, 1)]),
])
def test_residue_condition(name, mus):
    bf = load_space(name).bfunction
    for mu in mus:
        result = residue_check(bf, mu)
        assert abs(result.ratio - 1.0) < 1e-8, f"{name} μ={mu}: {result.ratio}"


def test_gamma_threshold(h3, ch2):
    assert h3.bfunction.gamma_threshold(1.0) == pytest.approx(1.0)
    assert h3.bfunction.gamma_threshold(0.4) == pytest.approx(0.4)
    # m_(β/2)/2 홀수: 1/(2ρ̃)
    assert ch2.bfunction.gamma_threshold(1.0) == pytest.approx(0.5)


# ----------------------------------------------------------------------
# 대칭화

def test_a_tilde_closed_form(h3, exp1):
    # ã(λ) = (i/2)(e^{-λ} - e^{λ})/sin(πλ) = -i sinh(λ)/sin(πλ)
    lam = 0.3 + 1.0j
    expected = -1j * np.sinh(lam) / np.sin(np.pi * lam)
    assert abs(a_tilde(h3.bfunction, exp1, [lam]) - expected) < 1e-12 * abs(expected)


def test_a_tilde_regular_on_wall(h3, exp1):
    value = a_tilde(h3.bfunction, exp1, [0.0])
    assert abs(value - (-1j / np.pi)) < 1e-7


def test_a_tilde_domain(h3, exp1):
    with pytest.raises(DomainViolationError):
        a_tilde(h3.bfunction, exp1, [1.5])
    assert np.isfinite(a_tilde(h3.bfunction, exp1, [1.5], check_domain=False))


def test_contour_factor_is_weyl_average(h3, exp1):
    coords = np.array([[0.2 + 1.3j], [-0.1 + 0.4j]])
    bf = h3.bfunction
    symmetric = contour_integrand_factor(bf, exp1, coords)
    direct = 0.5 * (unsymmetrized_factor(bf, exp1, coords) + unsymmetrized_factor(bf, exp1, -coords))
    np.testing.assert_allclose(symmetric, direct, rtol=1e-13)


# ----------------------------------------------------------------------
# 감쇠 상한

@pytest.mark.parametrize("name", ["H2", "H3", "CH2", "A2C"])
def test_decay_bounds(name):
    bf = load_space(name).bfunction
    assert pi_b_bound_check(bf, 400, seed=7).passed
    assert b_over_cc_bound_check(bf, 1.0, 400, seed=7).passed


def test_a_tilde_decay_bound(h3, rgamma1):
    fit = a_tilde_bound_check(h3.bfunction, rgamma1, 400, seed=3)
    assert fit.passed
    assert fit.constant > 0
