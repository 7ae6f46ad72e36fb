#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
c 함수, 밀도 인수분해, 차원 다항식 테스트
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats
from scipy import special

from master.space import load_space
from plancherel.c_function import c_beta, c_function
from plancherel.factors import density_factors
from roots.catalog import list_catalog_spaces
from utils.errors import GammaPoleError


@pytest.mark.parametrize("name", list_catalog_spaces())
def test_c_normalized_at_rho(name):
    space = load_space(name)
    assert abs(space.cfunction(space.datum.rho_coords) - 1.0) < 1e-12


@pytest.mark.parametrize("lam", [0.3 + 0.2j, 1.7, -0.4 + 2.0j, 2.5j])
def test_real_hyperbolic_plane_against_scipy(h2, lam):
    expected = 2.0 * 2.0 ** (-2.0 * lam) * special.gamma(2.0 * lam) / special.gamma(lam + 0.5) ** 2
    assert abs(h2.cfunction([lam]) - expected) < 1e-11 * abs(expected)


@given(floats(min_value=-3.0, max_value=3.0), floats(min_value=0.05, max_value=6.0))
@settings(max_examples=40, deadline=None)
def test_complex_rank_one_closed_form(x, y):
    # m = 2 이면 c(λ) = 1/λ, 밀도 = -λ²
    space = load_space("H3")
    lam = complex(x, y)
    assert abs(space.cfunction([lam]) - 1.0 / lam) < 1e-10 * abs(1.0 / lam)
    assert abs(space.cfunction.density([lam]) + lam ** 2) < 1e-10 * max(1.0, abs(lam) ** 2)


def test_c_pole_reports_root(h3):
    with pytest.raises(GammaPoleError) as info:
        h3.cfunction([0.0])
    assert info.value.root is not None


def test_c_beta_removable_doubling_point():
    # Γ(2λ) 극점 λ = -1/2 에서 m_β = 1 이면 유한
    value = c_beta(-0.5, 0, 1)
    assert np.isfinite(value)
    nearby = c_beta(-0.5 + 1e-7, 0, 1)
    assert abs(value - nearby) < 1e-5 * max(1.0, abs(value))


@pytest.mark.parametrize("name", ["H2", "H3", "H5", "CH2", "HH2", "A2C", "A2R", "B2C", "SU24"])
def test_density_positive_on_imaginary_axis(name, rng):
    space = load_space(name)
    y = rng.uniform(0.2, 5.0, (30, space.rank))
    values = space.cfunction.density(1j * y)
    assert np.all(values.real > 0)
    assert np.max(np.abs(values.imag) / np.abs(values)) < 1e-9


@pytest.mark.parametrize("name", ["H2", "H3", "CH2", "HH2", "A2C", "A2R", "SU24"])
def test_factorized_density_matches_gamma_path(name, rng):
    space = load_space(name)
    coords = rng.uniform(-0.9, 0.9, (40, space.rank)) + 1j * rng.uniform(-4.0, 4.0, (40, space.rank))
    direct = space.cfunction.density(coords)
    factored = space.factors.density_factored(coords, space.cfunction.c0)
    np.testing.assert_allclose(factored, direct, rtol=1e-9)


def test_factor_structure(ch2, h3):
    (beta,) = density_factors(ch2.datum).describe()
    assert beta["case"] == "d"
    assert beta["q"] == "cot"
    assert len(beta["p_roots"]) == 3
    (beta,) = density_factors(h3.datum).describe()
    assert beta["case"] == "a"
    assert beta["C_beta"] == pytest.approx(-4.0 * np.pi)
    assert beta["p_roots"] == [0.0, 0.0]


# ----------------------------------------------------------------------
# 차원 다항식

@pytest.mark.parametrize("mu", range(6))
def test_rank_one_dimensions(h2, h3, ch2, mu):
    assert h2.dimension.weyl_dim((mu,)) == 2 * mu + 1
    assert h3.dimension.weyl_dim((mu,)) == (mu + 1) ** 2
    assert ch2.dimension.weyl_dim((mu,)) == (mu + 1) ** 3


def test_sphere_dimensions():
    space = load_space("H5")
    for k in range(6):
        assert space.dimension.weyl_dim((k,)) == (k + 1) * (k + 2) ** 2 * (k + 3) // 12


def test_complex_rank_two_dimensions(a2c):
    for a in range(4):
        for b in range(4):
            sl3 = (a + 1) * (b + 1) * (a + b + 2) // 2
            assert a2c.dimension.weyl_dim((a, b)) == sl3 ** 2


def test_split_rank_two_dimensions():
    space = load_space("A2R")
    for a in range(4):
        for b in range(4):
            assert space.dimension.weyl_dim((a, b)) == (2 * a + 1) * (2 * b + 1) * (a + b + 1)


@pytest.mark.parametrize("name", ["H2", "H3", "H5", "CH2", "HH2", "A2C", "A2R", "B2C"])
def test_dimension_table_integral(name):
    space = load_space(name)
    _, dims, heights = space.weight_table(4)
    assert dims[0] == 1
    assert np.all(dims >= 1)
    assert heights.max() == 4


@pytest.mark.parametrize("mu", [(0,), (2,), (5,)])
def test_dimension_limit_of_c_ratio(h3, mu):
    value, residual = h3.dimension.lemma_limit(h3.cfunction, mu)
    assert abs(value - (mu[0] + 1) ** 2) < 1e-6 * (mu[0] + 1) ** 2
    assert residual < 1e-2


def test_convenience_wrappers(h3):
    assert abs(c_function(h3.datum, [2.0]) - 0.5) < 1e-12
