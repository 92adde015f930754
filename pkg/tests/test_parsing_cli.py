"""Grammar round trips, matrix JSON, CLI subcommands and determinism."""

import json
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from tropica.cli import main
from tropica.parsing import (
    ParseError,
    format_polynomial,
    parse_matrix_json,
    parse_polynomial,
)
from tropica.polynomials import LAURENT, POLY, Polynomial
from tropica.sampling import random_polynomial

REPO = Path(__file__).resolve().parent.parent


# -- grammar -----------------------------------------------------------------


def test_parse_examples():
    f = parse_polynomial("3*x^2*y + 0*x + -1")
    assert f.coeffs == {(2, 1): Fraction(3), (1, 0): Fraction(0), (0, 0): Fraction(-1)}
    g = parse_polynomial("x + y")
    assert g.coeffs == {(1, 0): Fraction(0), (0, 1): Fraction(0)}


def test_parse_rejects_negative_exponent_in_poly_mode():
    with pytest.raises(ParseError):
        parse_polynomial("x^-1 + y", POLY)


def test_parse_laurent_negative_exponent():
    f = parse_polynomial("x^-1 + y")
    assert (-1, 0) in f.coeffs


def test_parse_bottom_coefficient_dropped():
    assert parse_polynomial("-inf*x + y", nvars=2) == parse_polynomial("y", nvars=2)
    assert parse_polynomial("-inf", nvars=1) == Polynomial.zero(1)


def test_parse_merges_repeated_monomials():
    assert parse_polynomial("1*x + 3*x") == parse_polynomial("3*x")


def test_parse_repeated_variable_in_monomial():
    assert parse_polynomial("x*x") == parse_polynomial("x^2")


def test_parse_rational_coefficients():
    f = parse_polynomial("7/2*x + -3/4")
    assert f.coefficient((1,)) == Fraction(7, 2)
    assert f.coefficient((0,)) == Fraction(-3, 4)


def test_parse_numbered_variables():
    f = parse_polynomial("x1 + 2*x3")
    assert f.n == 3


def test_mixed_variable_styles_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x + x2")


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + * y")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_polynomial("")
    with pytest.raises(ParseError):
        parse_polynomial("x $ y")


def test_round_trip_random():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 5)
        mode = LAURENT if rng.random() < 0.5 else POLY
        f = random_polynomial(rng, n, mode, max_terms=5, max_deg=3)
        assert parse_polynomial(format_polynomial(f), mode, n) == f


def test_matrix_json():
    rows = parse_matrix_json('[["1", "1/2"], [0, "-2"]]')
    assert rows == [[Fraction(1), Fraction(1, 2)], [Fraction(0), Fraction(-2)]]
    with pytest.raises(ValueError):
        parse_matrix_json("[[1.5, 2]]")  # floats are not rationals
    with pytest.raises(ValueError):
        parse_matrix_json("[]")


# -- CLI ---------------------------------------------------------------------


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_eval(capsys):
    code, out, _ = run_cli(["eval", "--poly", "x + y + 0", "--point", "1,2"], capsys)
    assert code == 0
    assert json.loads(out) == {"value": "2", "vanishes": False}


def test_cli_bend(capsys):
    code, out, _ = run_cli(["bend", "--poly", "x + y"], capsys)
    assert code == 0
    assert json.loads(out) == {"pairs": [["x + y", "y"], ["x + y", "x"]]}


def test_cli_prime_variety(capsys):
    code, out, _ = run_cli(["prime-variety", "--matrix", "[[1,1,2]]"], capsys)
    assert code == 0 and json.loads(out)["point"] == ["1", "2"]
    code, out, _ = run_cli(["prime-variety", "--matrix", "[[0,1,1]]"], capsys)
    assert code == 0 and json.loads(out)["point"] is None


def test_cli_prime_check_report(capsys):
    code, out, _ = run_cli(["prime-check", "--matrix", "[[1,0],[2,0]]"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["admissible"] is False and data["violations"]


def test_cli_prime_member(capsys):
    code, out, _ = run_cli(
        ["prime-member", "--matrix", "[[1,0,0]]", "--poly", "x + y"], capsys
    )
    assert code == 0 and json.loads(out) == {"member": True}


def test_cli_prime_compare(capsys):
    code, out, _ = run_cli(
        ["prime-compare", "--matrix", "[[1,2]]", "--term1", "3*x", "--term2", "0*x^2"],
        capsys,
    )
    assert code == 0 and json.loads(out) == {"order": "greater"}


def test_cli_dim_report(capsys):
    code, out, _ = run_cli(["dim", "--poly", "x + y + 0"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["variety_dim"] == 1 and data["coordinate_dim"] == 2
    assert data["witness_checks"] == {
        "admissible": True,
        "contains_bends": True,
        "rank": 2,
    }


def test_cli_trace_verify_shipped(capsys):
    for name in ("monomial_bridge", "factor_swap"):
        code, out, _ = run_cli(
            ["trace-verify", "--trace", str(REPO / "traces" / f"{name}.json")], capsys
        )
        assert code == 0 and json.loads(out) == {"accepted": True}


def test_cli_trace_verify_rejects_corruption(tmp_path, capsys):
    data = json.loads((REPO / "traces" / "monomial_bridge.json").read_text())
    data["steps"][3]["conclusion"] = ["x", "x*y"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run_cli(["trace-verify", "--trace", str(bad)], capsys)
    assert code == 0
    result = json.loads(out)
    assert result["accepted"] is False and result["failed_step"] == 3


def test_cli_tideal_trop(capsys):
    code, out, _ = run_cli(["tideal-trop", "--gens", "x - y", "--degree", "1"], capsys)
    assert code == 0
    assert json.loads(out)["circuits"] == [["x", "y"]]


def test_cli_tideal_check_circuits(capsys):
    circuits = {
        "nvars": 2,
        "degree": 1,
        "mode": "poly",
        "circuits": [[[1, 0], [0, 1]]],
    }
    code, out, _ = run_cli(["tideal-check", "--circuits", json.dumps(circuits)], capsys)
    assert code == 0 and json.loads(out) == {"passed": True}


def test_cli_tideal_check_matrix_counterexample(capsys):
    code, out, _ = run_cli(
        [
            "tideal-check",
            "--matrix",
            "[[0,1,1]]",
            "--degree",
            "2",
            "--trials",
            "8",
            "--seed",
            "5",
        ],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is False and "counterexample" in data


def test_cli_exit_codes(capsys):
    code, _, err = run_cli(["eval", "--poly", "x + * y", "--point", "1"], capsys)
    assert code == 2 and json.loads(err)["error"] == "parse"
    code, _, err = run_cli(["eval", "--poly", "x + y", "--point", "1"], capsys)
    assert code == 1 and json.loads(err)["error"] == "domain"
    code, _, err = run_cli(["dim", "--poly", "x + 0", "--poly", "x + 1"], capsys)
    assert code == 1 and json.loads(err)["error"] == "domain"


def test_cli_plot_deterministic(capsys):
    args = ["plot", "--poly", "x + y + 0", "--bbox=-5,-5,5,5"]
    code, first, _ = run_cli(args, capsys)
    assert code == 0
    code, second, _ = run_cli(args, capsys)
    assert first == second
    assert first.count("<line") == 5  # two axes + three rays
    assert "<svg" in first


def test_cli_plot_empty_complex(capsys):
    code, out, _ = run_cli(["plot", "--poly", "3*x*y", "--bbox=-5,-5,5,5"], capsys)
    assert code == 0
    assert out.count("<line") == 2 and "<circle" not in out


def test_cli_plot_point(capsys):
    complex_json = json.dumps(
        {
            "ambient": 2,
            "mode": "laurent",
            "cells": [
                {
                    "stratum": [],
                    "normals": [["1", "0"], ["0", "1"]],
                    "rhs": ["1", "2"],
                    "relations": ["eq", "eq"],
                    "dim": 0,
                    "interior_point": ["1", "2"],
                }
            ],
        }
    )
    code, out, _ = run_cli(["plot", "--complex", complex_json, "--bbox=-5,-5,5,5"], capsys)
    assert code == 0 and out.count("<circle") == 1


def test_cli_json_determinism(capsys):
    args = ["hypersurface", "--poly", "x + y + 0"]
    _, first, _ = run_cli(args, capsys)
    _, second, _ = run_cli(args, capsys)
    assert first == second


def test_cli_seed_env_override(capsys, monkeypatch):
    args = [
        "tideal-check",
        "--point",
        "0,0",
        "--degree",
        "2",
        "--trials",
        "5",
        "--seed",
        "1",
    ]
    monkeypatch.setenv("TROPICA_SEED", "42")
    _, out_env, _ = run_cli(args, capsys)
    monkeypatch.delenv("TROPICA_SEED")
    _, out_seed1, _ = run_cli(args, capsys)
    assert json.loads(out_env)["passed"] and json.loads(out_seed1)["passed"]


def test_cli_text_format(capsys):
    code, out, _ = run_cli(
        ["eval", "--poly", "x + y + 0", "--point", "1,2", "--format", "text"], capsys
    )
    assert code == 0
    assert "value: 2" in out


def test_cli_entry_point_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "tropica.cli", "eval", "--poly", "0", "--point", ""],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2  # empty point is a parse error


def test_readme_trace_example_verifies():
    # the schema example documented in the README must stay valid
    import re

    from tropica.traces import trace_from_json, verify_trace

    readme = (REPO / "README.md").read_text()
    block = re.search(r'```json\n(\{.*?\})\n```', readme, re.DOTALL).group(1)
    trace = trace_from_json(json.loads(block))
    assert verify_trace(trace).accepted
