#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
공용 픽스처
"""

import numpy as np
import pytest

from hardy.builtins import exp_decay, reciprocal_gamma
from master.space import load_space
from utils import safety


@pytest.fixture(scope="session")
def h2():
    return load_space("H2")


@pytest.fixture(scope="session")
def h3():
    return load_space("H3")


@pytest.fixture(scope="session")
def ch2():
    return load_space("CH2")


@pytest.fixture(scope="session")
def a2c():
    return load_space("A2C")


@pytest.fixture(scope="session")
def exp1():
    """a(λ) = e^{-λ}, P = 1"""
    return exp_decay(P=1.0)


@pytest.fixture(scope="session")
def rgamma1():
    """a(λ) = 1/Γ(λ+1), 인증서 P = 2, A = 1.7"""
    return reciprocal_gamma(P=2.0, A=1.7)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def output_dir(tmp_path):
    path = tmp_path / "out"
    path.mkdir()
    return str(path)


@pytest.fixture(autouse=True)
def clear_shutdown():
    safety.reset_shutdown()
    yield
    safety.reset_shutdown()
