#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Hardy 클래스, 인증서 검사, Laplace 생성기 테스트
"""

import numpy as np
import pytest

from hardy.builtins import (
    exp_decay, laplace_box, parse_hardy_spec, product_hardy, reciprocal_gamma,
    sine_counterexample, zero_function
)
from hardy.hardy import HardyCertificate, HardyFunction, check_certificate, sample_hardy_domain
from hardy.laplace import box_transform, laplace_hardy
from utils.errors import CertificateError, UsageError


@pytest.mark.parametrize("kwargs", [
    {"A": np.pi, "P": 1.0, "delta": 1.0, "C": 1.0},
    {"A": 0.0, "P": 0.0, "delta": 1.0, "C": 1.0},
    {"A": 0.0, "P": 1.0, "delta": 0.0, "C": 1.0},
    {"A": 0.0, "P": 1.0, "delta": 1.2, "C": 1.0},
    {"A": 0.0, "P": 1.0, "delta": 1.0, "C": 0.0},
])
def test_certificate_validation(kwargs):
    with pytest.raises(CertificateError):
        HardyCertificate(**kwargs).validate()


def test_uncertified_function_rejected():
    a = HardyFunction(evaluator=lambda c: np.ones(c.shape[:-1]), certificate=None, name="bare")
    with pytest.raises(CertificateError):
        a.require_certified()
    with pytest.raises(CertificateError):
        check_certificate(a, n_samples=10)


def test_exp_certificate_is_tight(exp1):
    report = check_certificate(exp1, n_samples=500, seed=1)
    assert report.passed
    assert report.max_ratio == pytest.approx(1.0)


def test_reciprocal_gamma_certificate(rgamma1):
    report = check_certificate(rgamma1, n_samples=2000, seed=1)
    assert report.passed
    assert report.max_ratio <= 1.0


def test_sine_counterexample_is_flagged():
    report = check_certificate(sine_counterexample(A=3.0), n_samples=2000, seed=1)
    assert not report.passed
    assert report.violations > 0
    assert abs(report.worst_point[0].imag) > 1.0


def test_certificate_sample_count():
    with pytest.raises(CertificateError):
        check_certificate(exp_decay(), n_samples=0)


def test_hardy_domain_samples(h3):
    points = sample_hardy_domain(
        1, 0.5, 300, seed=4, rho=h3.datum.rho_coords,
        star_coeffs=h3.datum.star_coeffs, rho_tilde=h3.datum.rho_tilde
    )
    assert points.shape == (300, 1)
    assert np.all(points.real > -0.5)
    assert np.all(points.real <= 4.0)
    assert np.all(np.abs(points.imag) <= 10.0)


def test_reciprocal_gamma_range():
    with pytest.raises(CertificateError):
        reciprocal_gamma(A=1.0)


def test_zero_function():
    a = zero_function(rank=2)
    assert np.all(a(np.ones((3, 2))) == 0)
    assert check_certificate(a, n_samples=20).passed


# ----------------------------------------------------------------------
# Laplace 변환

def test_box_quadrature_matches_closed_form():
    closed = box_transform(1.0, 2.0)
    by_quadrature = laplace_hardy(lambda x: np.ones(x.shape[0]), 1.0, 2.0)
    lam = np.array([[0.3 + 2.0j], [-0.5 + 0.1j], [2.0], [1e-8]])
    np.testing.assert_allclose(by_quadrature(lam), closed(lam), rtol=1e-12)


def test_box_rank_two():
    a = laplace_box(P=1.0, R=2.0, rank=2)
    lam = np.array([[0.3 + 1j, 0.7 - 2j]])
    single = box_transform(1.0, 2.0)
    expected = single(lam[:, :1]) * single(lam[:, 1:])
    np.testing.assert_allclose(a(lam), expected, rtol=1e-14)
    assert check_certificate(a, n_samples=300, seed=2).passed


def test_box_transform_at_origin():
    assert box_transform(1.0, 3.0)(np.zeros((1, 1)))[0] == pytest.approx(2.0)


def test_laplace_support_validation():
    with pytest.raises(CertificateError):
        laplace_hardy(lambda x: np.ones(x.shape[0]), 2.0, 1.0)
    with pytest.raises(CertificateError):
        laplace_hardy(np.ones(3), 1.0, 2.0)


def test_laplace_certificate_holds():
    # h(x) = x e^{-x} 를 [1, 3] 에 제한
    a = laplace_hardy(lambda x: x[:, 0] * np.exp(-x[:, 0]), 1.0, 3.0, A=1.0)
    assert a.certificate.P == 1.0
    assert check_certificate(a, n_samples=500, seed=5).passed


# ----------------------------------------------------------------------
# 곱 함수와 문자열 파서

def test_product_hardy(exp1, rgamma1):
    a = product_hardy([exp1], rgamma1)
    assert a.rank == 2
    assert a.certificate.A == rgamma1.certificate.A
    assert a.certificate.P == 1.0
    assert a.certificate.C == pytest.approx(rgamma1.certificate.C)
    lam = np.array([[0.4 + 1j, 0.2 - 0.5j]])
    np.testing.assert_allclose(a(lam), exp1(lam[:, :1]) * rgamma1(lam[:, 1:]), rtol=1e-14)


@pytest.mark.parametrize("spec,name,P", [
    ("exp:P=1", "exp(P=1)", 1.0),
    ("exp:P=2.5", "exp(P=2.5)", 2.5),
    ("rgamma:P=2,A=1.7", "rgamma(P=2,A=1.7)", 2.0),
    ("box:P=1,R=2", "box[1,2]", 1.0),
    ("zero", "zero", 1.0),
])
def test_parse_hardy_spec(spec, name, P):
    a = parse_hardy_spec(spec)
    assert a.name == name
    assert a.certificate.P == P


@pytest.mark.parametrize("spec", ["foo", "exp:Q=1", "exp:P=x", "exp:P", "rgamma:A=1.0", "exp:P=-1"])
def test_parse_hardy_spec_errors(spec):
    with pytest.raises(UsageError):
        parse_hardy_spec(spec)


def test_parse_hardy_spec_rank():
    a = parse_hardy_spec("exp:P=1", rank=2)
    assert a.rank == 2
    assert a(np.array([[1.0, 2.0]]))[0] == pytest.approx(np.exp(-3.0))


@pytest.mark.parametrize("shape", [(1, 2), (3, 2), (1, 2, 2), (4, 1, 2)])
def test_product_hardy_keeps_batch_shape(exp1, shape):
    a = product_hardy([exp1], exp1)
    lam = np.full(shape, 0.2 + 0.1j)
    values = a(lam)
    assert values.shape == shape[:-1]
    np.testing.assert_allclose(values, np.exp(-0.4 - 0.2j), rtol=1e-14)
