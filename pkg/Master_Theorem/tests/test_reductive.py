#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
환원 공간 (토러스 × 반단순) 테스트
"""

import numpy as np
import pytest

from hardy.builtins import exp_decay, product_hardy
from master.reductive import (
    ReductivePoints, reductive_a_tilde, reductive_series, reductive_space, reductive_verify
)
from master.series import series_f
from master.classical import classical_series
from utils.errors import RadiusError, UsageError


@pytest.fixture(scope="module")
def torus_h3(h3):
    return reductive_space(1, h3)


@pytest.fixture(scope="module")
def product_exp(exp1):
    return product_hardy([exp1], exp1)


def test_space_shape(torus_h3):
    assert torus_h3.name == "T1xH3"
    assert torus_h3.rank == 2
    np.testing.assert_allclose(torus_h3.rho, [0.0, 1.0])
    assert torus_h3.describe()["semisimple"] == "H3"
    with pytest.raises(UsageError):
        reductive_space(0, "H3")


def test_torus_b_function(torus_h3):
    lam = 0.3 + 0.4j
    assert abs(torus_h3.b0([lam]) - 0.5j / np.sin(np.pi * lam)) < 1e-12
    coords = np.array([lam, 0.2 + 1.0j])
    expected = torus_h3.b0(coords[:1]) * torus_h3.semisimple.bfunction.b_eval(coords[1:])
    assert abs(torus_h3.b(coords) - expected) < 1e-12 * abs(expected)


def test_weight_table(torus_h3):
    mus, dims, heights = torus_h3.weight_table(2, 2)
    assert mus.shape == (6, 2)
    # d 는 토러스 성분과 무관
    for mu, d in zip(mus, dims):
        assert d == (mu[1] + 1) ** 2
    np.testing.assert_array_equal(heights, mus.sum(axis=1))
    assert torus_h3.psi_torus([2.0], [0.5]) == pytest.approx(0.25)


def test_series_factorizes(torus_h3, product_exp, exp1):
    x, H = [0.5], [0.3]
    joint = reductive_series(torus_h3, product_exp, x, H)
    expected = classical_series(exp1, 0.5) * series_f("H3", exp1, H).value
    assert abs(joint - expected) < 1e-9


def test_series_errors(torus_h3, product_exp, exp1):
    with pytest.raises(RadiusError):
        reductive_series(torus_h3, product_exp, [3.0], [0.3])
    with pytest.raises(UsageError):
        reductive_series(torus_h3, exp1, [0.5], [0.3])


def test_a_tilde_factorizes(torus_h3, product_exp, exp1):
    coords = np.array([0.3, 0.2 + 0.5j])
    joint = reductive_a_tilde(torus_h3, product_exp, coords)
    semi = -1j * np.sinh(coords[1]) / np.sin(np.pi * coords[1])
    expected = 0.5j / np.sin(0.3 * np.pi) * np.exp(-0.3) * semi
    assert abs(joint - expected) < 1e-10 * abs(expected)


@pytest.mark.slow
def test_verify_product(torus_h3, product_exp):
    points = ReductivePoints(x=[[0.5]], H=[[0.3]], spectral=[[0.3, 0.2 + 0.5j]])
    report = reductive_verify(torus_h3, product_exp, points)
    assert report.passed, report.failures
    ids = {record.check_id for record in report.records}
    assert {"reductive.dimension", "reductive.series_contour", "reductive.series_factor",
            "reductive.contour_factor", "reductive.interpolation_factor"} <= ids


@pytest.mark.slow
def test_verify_non_product(torus_h3):
    a = exp_decay(P=1.0, rank=2)
    points = ReductivePoints(x=[[0.5]], H=[[0.0]], spectral=[[0.3, 0.2 + 0.5j]])
    report = reductive_verify(torus_h3, a, points)
    assert report.passed, report.failures
    assert report.findings


def test_a_tilde_factorizes_on_grid(torus_h3, product_exp):
    for coords in ([0.1, 0.4 + 1.0j], [-0.2, 0.3 - 0.6j], [0.25, 0.1j]):
        coords = np.asarray(coords, dtype=complex)
        joint = reductive_a_tilde(torus_h3, product_exp, coords)
        semi = -1j * np.sinh(coords[1]) / np.sin(np.pi * coords[1])
        expected = 0.5j / np.sin(np.pi * coords[0]) * np.exp(-coords[0]) * semi
        assert abs(joint - expected) < 1e-9 * abs(expected)
