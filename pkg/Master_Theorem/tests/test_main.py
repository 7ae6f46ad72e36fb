#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
명령행 인터페이스 테스트
"""

import io
import os
import re

import numpy as np
import pytest

import main


def _run(*argv):
    out = io.StringIO()
    code = main.run(list(argv), out)
    return code, out.getvalue()


def _complex(text):
    real, imag = text.split()
    return complex(float(real), float(imag.rstrip("j")))


def test_catalog_list():
    code, text = _run("catalog", "list")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "name,family,rank,provenance"
    assert any(line.startswith("H3,") for line in lines)


def test_catalog_show():
    code, text = _run("catalog", "show", "H3")
    assert code == 0
    assert "name: H3" in text
    assert "omega_max:" in text


@pytest.mark.parametrize("space,mu,expected", [("H3", "2", "9"), ("A2C", "1,1", "64"), ("H2", "3", "7")])
def test_eval_dimension(space, mu, expected):
    assert _run("eval", "d", "--space", space, "--mu", mu) == (0, expected + "\n")


def test_eval_c_and_density():
    code, text = _run("eval", "c", "--space", "H3", "--lambda", "2")
    assert code == 0
    assert abs(_complex(text) - 0.5) < 1e-14
    code, text = _run("eval", "density", "--space", "H3", "--lambda", "0.5i")
    assert abs(_complex(text) - 0.25) < 1e-12


def test_eval_b():
    code, text = _run("eval", "b", "--space", "H3", "--lambda", "0.3+0.4j")
    expected = 0.5j / np.sin(np.pi * (0.3 + 0.4j))
    assert code == 0
    assert abs(_complex(text) - expected) < 1e-12 * abs(expected)


def test_eval_phi():
    code, text = _run("eval", "phi", "--space", "H3", "--lambda", "0.5", "--t", "0.7")
    expected = np.sinh(0.7) / (0.5 * np.sinh(1.4))
    assert code == 0
    assert abs(_complex(text) - expected) < 1e-12


@pytest.mark.parametrize("argv", [
    ["eval", "d", "--space", "H3"],
    ["eval", "d", "--space", "H3", "--mu", "1,2"],
    ["eval", "c", "--space", "H3"],
    ["eval", "c", "--space", "H3", "--lambda", "abc"],
    ["eval", "c", "--space", "NOPE", "--lambda", "1"],
    ["eval", "phi", "--space", "H3", "--lambda", "0.5"],
    ["eval", "phi", "--space", "A2C", "--lambda", "0.5,0.5", "--t", "1"],
    ["eval", "gamma", "--space", "H3"],
    ["catalog", "show"],
    ["tabulate", "c", "--space", "H3", "--steps", "1"],
    ["verify", "classical", "--space", "H3"],
    ["verify", "semisimple", "--tol", "FOO=1"],
    ["verify", "semisimple", "--workers", "0"],
    [],
])
def test_usage_errors(argv, tmp_path):
    if argv and argv[0] == "verify":
        argv = argv + ["--output-dir", str(tmp_path)]
    code, _ = _run(*argv)
    assert code == 2


def test_eval_pole_is_failure():
    code, _ = _run("eval", "b", "--space", "H3", "--lambda", "2")
    assert code == 1


def test_tabulate_density(tmp_path):
    code, text = _run("tabulate", "density", "--space", "H3", "--steps", "5", "--y-max", "2")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "y,re,im,abs"
    assert len(lines) == 6
    y, re, im, _ = (float(v) for v in lines[1].split(","))
    assert complex(re, im) == pytest.approx(-(0.25 - 2j) ** 2)

    path = os.path.join(str(tmp_path), "table", "b.csv")
    assert _run("tabulate", "b", "--space", "H3", "--steps", "3", "--output", path)[0] == 0
    with open(path, encoding="utf-8") as f:
        assert len(f.read().splitlines()) == 4


def test_parse_tolerances():
    assert main.parse_tolerances(["1e-5"]) == {"SERIES_CONTOUR": 1e-5}
    assert main.parse_tolerances(["classical=1e-7"]) == {"CLASSICAL": 1e-7}
    with pytest.raises(main.UsageError):
        main.parse_tolerances(["CLASSICAL=-1"])


@pytest.mark.slow
def test_verify_classical(tmp_path, monkeypatch):
    monkeypatch.setattr(main, "setup_signal_handlers", lambda: False)
    output_dir = str(tmp_path / "run")
    code, text = _run("verify", "classical", "--hardy", "exp:P=1", "--output-dir", output_dir)
    assert code == 0
    assert "classical: 15/15" in text
    for name in ("report.json", "report.csv", "report.html", "master_theorem.log"):
        assert os.path.exists(os.path.join(output_dir, name))


@pytest.mark.slow
@pytest.mark.parametrize("suite,space", [("semisimple", "H3"), ("reductive", "H3")])
def test_verify_suite_passes(tmp_path, monkeypatch, suite, space):
    monkeypatch.setattr(main, "setup_signal_handlers", lambda: False)
    output_dir = str(tmp_path / suite)
    code, text = _run("verify", suite, "--space", space, "--hardy", "exp:P=1", "--output-dir", output_dir)
    assert code == 0, text
    counts = re.findall(r": (\d+)/(\d+)\n", text)
    assert counts
    for passed, total in counts:
        assert passed == total and int(total) > 0
