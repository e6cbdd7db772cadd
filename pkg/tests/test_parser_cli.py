"""Expression parsing, report formats, CLI behaviour and exit codes."""

import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from heckehom.exprparse import ParseError, parse_hecke, parse_laurent, parse_scalar
from heckehom.hecke import basis, one
from heckehom.laurent import Q, qpow
from heckehom.weyl import S, T, WeylWord
from heckehom.cli import main
from heckehom.suites import ConfigError, SuiteConfig, run_suite

from test_hecke import random_element


def test_parse_examples():
    assert parse_hecke("T[e]") == one()
    assert parse_hecke("(q-1)*T[s] + q*T[e]") == basis(S).scale(Q - 1) + one().scale(Q)
    assert parse_hecke("q^-2*T[st]") == basis(WeylWord.parse("st")).scale(qpow(-2))
    assert parse_hecke("3/2*q*T[t]") == basis(T).scale(Q * Fraction(3, 2))
    assert parse_laurent("q^-1 + q") == qpow(-1) + Q
    assert parse_scalar("-5/3") == -parse_scalar("5/3")
    assert parse_hecke("-q + 1") == one().scale(1 - Q)


def test_parse_round_trip_random():
    rng = random.Random(13)
    for _ in range(50):
        element = random_element(rng, max_length=6)
        assert parse_hecke(element.render()) == element


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_hecke("T[s] + @")
    assert err.value.position == 7
    with pytest.raises(ParseError):
        parse_hecke("T[ss]")
    with pytest.raises(ParseError):
        parse_hecke("q T[s]")  # missing operator
    with pytest.raises(ParseError):
        parse_hecke("T[s]/2")  # division by a non-scalar context
    with pytest.raises(ParseError):
        parse_laurent("T[s]")
    with pytest.raises(ParseError):
        parse_scalar("q")


def test_reduce_command(capsys):
    assert main(["reduce", "T[ts]"]) == 0
    assert capsys.readouterr().out == "[E(1)]\n"
    assert main(["reduce", "T[s]*T[t] - T[t]*T[s]"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert main(["reduce", "T[sts]"]) == 0
    assert capsys.readouterr().out == "(-1 + q)*[E(1)] + q*[Tt]\n"
    assert main(["reduce", "T[s"]) == 2
    assert "error" in capsys.readouterr().err


def test_table_command(capsys):
    assert main(["table", "rpoly", "1..2"]) == 0
    out = capsys.readouterr().out
    assert "1 - 2*q + q^2" in out
    assert main(["table", "commutator", "0..1"]) == 0
    out = capsys.readouterr().out
    assert "0" in out
    assert main(["table", "pres", "0..1", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("0,2")
    assert main(["table", "rpoly", "nonsense"]) == 2


def test_verify_exit_codes_and_formats(capsys, tmp_path):
    assert main(["verify", "clozel", "--nmax", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suite"] == "clozel"
    assert payload["pass"] is True
    assert payload["seed"] == 20260810
    case = payload["cases"][0]
    assert set(case) == {"id", "claim", "params", "expected", "actual", "pass"}

    out_file = tmp_path / "report.csv"
    assert main(["verify", "clozel", "--nmax", "2", "--format", "csv", "--out", str(out_file)]) == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "id,claim,params,expected,actual,pass"
    assert len(lines) == 6  # header + Ts, Tt, E0, E1, E2

    assert main(["verify", "clozel", "--nmax", "0"]) == 2  # config error


def test_verify_determinism():
    cfg = SuiteConfig(nmax=4, lmax=4, reduce_oracle_cutoff=4, torus_ranks=(1,), engine_algebras=("ground_field",))
    first = run_suite("all", cfg).to_json()
    second = run_suite("all", cfg).to_json()
    assert first == second


def test_unknown_suite_rejected():
    with pytest.raises(ConfigError):
        run_suite("nonsense", SuiteConfig())


def test_verify_exit_code_on_failure(monkeypatch):
    from heckehom import suites

    def failing_suite(cfg):
        report = suites.SuiteReport("hecke", cfg.seed)
        report.add("stub/fail", "a deliberately failing check", {}, "1", "0")
        return report

    monkeypatch.setitem(suites._SUITES, "hecke", failing_suite)
    assert main(["verify", "hecke"]) == 1


def test_engine_spec_file_flag(tmp_path, capsys):
    from heckehom import engine as eg

    path = tmp_path / "field.json"
    path.write_text(eg.spec_to_json(eg.ground_field()))
    cfg = SuiteConfig(engine_algebras=(), engine_spec_files=(str(path),), engine_cutoff=2)
    report = run_suite("engine", cfg)
    assert report.passed
    assert any("ground_field" in case.id for case in report.cases)


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "heckehom.cli", "reduce", "T[ts]"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "[E(1)]"
