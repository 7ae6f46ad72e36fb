#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
근계, 튜브 영역, 카탈로그 테스트
"""

import numpy as np
import pytest

from roots.catalog import (
    build_catalog_space, catalog_entry, list_catalog_spaces, load_catalog
)
from roots.root_system import (
    DominantWeight, SpectralPoint, build_root_system, multiplicity_case
)
from roots.tubes import TubeKind, sigma_m_limits, tube_mask, tube_membership, weyl_tube_intersections
from utils.errors import (
    CatalogSchemaError, DomainViolationError, MultiplicityError, ParityViolationError,
    TubeParameterError, UnknownSpaceError, UnsupportedFamilyError, ZeroRootError
)


@pytest.mark.parametrize("family,rank,mults,order,positive", [
    ("A", 1, {"root": 2}, 2, 1),
    ("A", 2, {"root": 1}, 6, 3),
    ("A", 3, {"root": 2}, 24, 6),
    ("B", 2, {"short": 2, "long": 2}, 8, 4),
    ("C", 3, {"short": 1, "long": 1}, 48, 9),
    ("D", 4, {"root": 2}, 192, 12),
    ("G2", 2, {"short": 2, "long": 2}, 12, 6),
    ("BC", 1, {"half": 2, "double": 1}, 2, 2),
    ("BC", 2, {"half": 4, "middle": 2, "double": 1}, 8, 6),
])
def test_weyl_group_and_roots(family, rank, mults, order, positive):
    datum = build_root_system(family, rank, mults)
    assert datum.weyl_order == order
    assert len(datum.roots) == positive
    # ω 기저 쌍대성
    duality = datum.omega @ datum.beta.T / datum.beta_norm2[None, :]
    np.testing.assert_allclose(duality, np.eye(rank), atol=1e-12)
    # w₀ρ = -ρ
    np.testing.assert_allclose(datum.act(datum.rho_coords, datum.w0_index), -datum.rho_coords, atol=1e-12)


def test_rank_one_constants(h2, h3, ch2):
    assert h2.datum.rho_coords.tolist() == pytest.approx([0.5])
    assert h3.datum.rho_coords.tolist() == pytest.approx([1.0])
    assert ch2.datum.rho_coords.tolist() == pytest.approx([1.0])
    assert h3.datum.omega_max == pytest.approx(np.sqrt(2.0))
    assert h3.datum.c1 == pytest.approx(1.0 / np.sqrt(2.0))
    assert ch2.datum.star_half_mult.tolist() == [2]
    assert ch2.datum.degree_m == 3


def test_complex_case_rho_is_sum_of_weights(a2c):
    datum = a2c.datum
    assert datum.is_complex_case
    np.testing.assert_allclose(datum.rho_coords, [1.0, 1.0], atol=1e-12)
    assert datum.rho.rho_tilde == pytest.approx((1.0, 1.0, 1.0))


def test_bc_is_not_complex_case(ch2):
    assert not ch2.datum.is_reduced
    assert not ch2.datum.is_complex_case


@pytest.mark.parametrize("family,rank,mults,error", [
    ("BC", 1, {"half": 3, "double": 1}, ParityViolationError),
    ("BC", 1, {"half": 2, "double": 2}, ParityViolationError),
    ("A", 2, {"short": 1, "long": 1}, MultiplicityError),
    ("B", 2, {"short": 1}, MultiplicityError),
    ("A", 1, {"root": 0}, MultiplicityError),
    ("E", 6, {"root": 1}, UnsupportedFamilyError),
    ("D", 2, {"root": 1}, UnsupportedFamilyError),
    ("G2", 3, {"short": 1, "long": 1}, UnsupportedFamilyError),
])
def test_invalid_root_data(family, rank, mults, error):
    with pytest.raises(error):
        build_root_system(family, rank, mults)


def test_parity_checked_before_class_names():
    # 클래스 이름이 틀려도 홀짝 위반이 먼저 보고됨
    with pytest.raises(ParityViolationError):
        build_root_system("A", 1, {"half": 1, "root": 1})


@pytest.mark.parametrize("half,mult,case", [(0, 2, "a"), (0, 1, "b"), (4, 3, "c"), (2, 1, "d"), (2, 4, "a")])
def test_multiplicity_case(half, mult, case):
    assert multiplicity_case(half, mult) == case


def test_dominant_weights_order(a2c):
    weights = a2c.datum.dominant_weights(2)
    assert [mu.coords for mu in weights] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    with pytest.raises(DomainViolationError):
        a2c.datum.dominant_weights(-1)


def test_dominant_weight_validation():
    assert DominantWeight((2, 3)).height == 5
    with pytest.raises(DomainViolationError):
        DominantWeight((1, -1))
    with pytest.raises(DomainViolationError):
        DominantWeight((0.5,))


def test_weyl_orbit_sizes(a2c):
    datum = a2c.datum
    assert len(datum.weyl_orbit(SpectralPoint((0.3 + 0.1j, 0.7)))) == 6
    assert len(datum.weyl_orbit(SpectralPoint((0.0, 0.0)))) == 1
    assert len(datum.weyl_orbit(SpectralPoint((1.0, 0.0)))) == 3


def test_lambda_sub(h3):
    datum = h3.datum
    alpha = datum.roots[0]
    assert datum.lambda_sub(SpectralPoint((0.4 + 2j,)), alpha) == pytest.approx(0.4 + 2j)
    with pytest.raises(ZeroRootError):
        datum.lambda_sub(SpectralPoint((1.0,)), np.zeros_like(alpha))


def test_radial_norm_matches_root_value(h3):
    # 계수 1: h = ω(H), α(H) = h
    datum = h3.datum
    assert datum.root_values([2.0]).tolist() == pytest.approx([2.0])
    assert datum.radial_norm([2.0]) == pytest.approx(np.sqrt(2.0))


# ----------------------------------------------------------------------
# 튜브

def test_rank_one_tubes(h3):
    datum = h3.datum
    assert tube_membership(datum, [0.5 + 3j], TubeKind.T, 0.6)
    assert not tube_membership(datum, [0.6 + 3j], TubeKind.T, 0.6)
    assert tube_membership(datum, [-0.7 + 1j], TubeKind.T_DOUBLE_PRIME, 0.6)
    assert not tube_membership(datum, [-0.7 + 1j], TubeKind.T_PRIME, 0.6)
    assert tube_membership(datum, [5.0], TubeKind.HARDY, 0.6)
    assert not tube_membership(datum, [-0.6], TubeKind.HARDY, 0.6)


def test_sigma_m_limits(ch2):
    assert sigma_m_limits(ch2.datum).tolist() == [0.5]
    assert sigma_m_limits(build_catalog_space("HH2")).tolist() == [1.0]
    assert sigma_m_limits(build_catalog_space("HH2"), 0.25).tolist() == [0.75]
    assert tube_membership(ch2.datum, [0.4], TubeKind.SIGMA_M)
    assert not tube_membership(ch2.datum, [0.4], TubeKind.SIGMA_M_ETA, 0.2)


@pytest.mark.parametrize("kind,param", [
    (TubeKind.T, 0.0), (TubeKind.T, 1.5), (TubeKind.HARDY, None), (TubeKind.SIGMA_M_ETA, 0.5)
])
def test_tube_parameter_validation(h3, kind, param):
    with pytest.raises(TubeParameterError):
        tube_mask(h3.datum, np.zeros((1, 1)), kind, param)


@pytest.mark.parametrize("name", ["H3", "CH2", "A2C", "A2R", "SU24"])
def test_weyl_intersections_equal_tube(name, rng):
    datum = build_catalog_space(name)
    delta = 0.5
    bound = 1.5 * delta * float(np.max(datum.rho_coords))
    coords = rng.uniform(-bound, bound, (2000, datum.rank)) + 1j * rng.normal(size=(2000, datum.rank))
    masks = weyl_tube_intersections(datum, coords, delta)
    assert np.array_equal(masks["T"], masks["double_prime"])
    assert np.array_equal(masks["T"], masks["prime"])
    # T ⊂ T′ = T″ ∩ w₀(T″)
    assert not np.any(masks["T"] & ~masks["w0"])


# ----------------------------------------------------------------------
# 카탈로그

def test_catalog_contents():
    names = list_catalog_spaces()
    assert names[:2] == ["H2", "H3"]
    assert {"CH2", "A2C", "SU24"} <= set(names)
    assert catalog_entry("H3")["rank"] == 1
    with pytest.raises(UnknownSpaceError):
        catalog_entry("E8")


def test_catalog_covers_all_cases():
    cases = {}
    for name in list_catalog_spaces():
        datum = build_catalog_space(name)
        for half, mult in zip(datum.star_half_mult, datum.star_mult):
            cases.setdefault(multiplicity_case(int(half), int(mult)), set()).add(name)
    assert set(cases) == {"a", "b", "c", "d"}
    assert "CH2" in cases["d"]
    assert "HH2" in cases["c"]


@pytest.mark.parametrize("body", [
    '{schema_version: 1, spaces: [{name: "X", family: "A", rank: 1, multiplicities: {root: 1}}]}',
    '{schema_version: 1, spaces: [{name: "X", family: "A", rank: 1, multiplicities: {root: 1}, provenance: "", extra: 1}]}',
    '{schema_version: 2, spaces: []}',
    '{schema_version: 1, spaces: [], comment: "x"}',
    '{schema_version: 1, spaces: [{name: "X", family: "A", rank: "1", multiplicities: {root: 1}, provenance: ""}]}',
    '{schema_version: 1, spaces: [{name: "X", family: "A", rank: 1, multiplicities: {root: 1}, provenance: ""},'
    ' {name: "X", family: "A", rank: 1, multiplicities: {root: 2}, provenance: ""}]}',
    '{schema_version: 1, spaces: [',
])
def test_catalog_schema_errors(tmp_path, body):
    path = tmp_path / "catalog.json5"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(CatalogSchemaError):
        load_catalog(str(path))


def test_catalog_accepts_comments(tmp_path):
    path = tmp_path / "catalog.json5"
    path.write_text(
        '// test\n{schema_version: 1, spaces: [{name: "X", family: "A", rank: 1, '
        'multiplicities: {root: 1}, provenance: "",},],}',
        encoding="utf-8",
    )
    assert list(load_catalog(str(path))) == ["X"]
