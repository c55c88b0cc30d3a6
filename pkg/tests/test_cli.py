import json
import logging

import pytest
from typer.testing import CliRunner

from lgschubert import LOGGER, RouteMismatchError, VerificationReport
from lgschubert import cli
from lgschubert.cli import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def detach_cli_logging():
    yield
    if cli._handler is not None:
        LOGGER.removeHandler(cli._handler)
        cli._handler = None
    LOGGER.setLevel(logging.NOTSET)


def run(*args, env=None):
    return runner.invoke(app, list(args), env=env)


def last_line(result):
    return result.stdout.strip().splitlines()[-1]


def test_degree():
    result = run("degree", "-n", "3")
    assert result.exit_code == 0
    assert last_line(result) == "16"


def test_degree_check_json():
    result = run("degree", "-n", "3", "--check", "--route", "localization", "--json")
    assert result.exit_code == 0
    assert json.loads(last_line(result)) == {"n": 3, "degree": 16, "integral": 16, "route": "localization"}


def test_integral_text_and_json():
    result = run("integral", "-n", "3", "--class", "s1^2*s2^2")
    assert result.exit_code == 0
    assert last_line(result) == "4"
    result = run("integral", "-n", "3", "--class", "s1^2*s2^2", "--json")
    assert json.loads(last_line(result)) == {"n": 3, "route": "main", "c_n": "24", "integral": "4"}


@pytest.mark.parametrize("route", ["dp", "localization", "grassmannian"])
def test_integral_routes(route):
    result = run("integral", "-n", "3", "--class", "s1^2*s2^2", "--route", route)
    assert result.exit_code == 0
    assert last_line(result) == "4"


def test_integral_with_weights():
    result = run("integral", "-n", "3", "--class", "s1^6", "--route", "localization", "--weights", "1,-2,1/2")
    assert result.exit_code == 0
    assert last_line(result) == "16"


@pytest.mark.parametrize(
    "args",
    [
        ("integral", "-n", "3", "--class", "s1 + x"),
        ("integral", "-n", "3", "--class", "s1^6", "--route", "localization", "--weights", "1,-1,2"),
        ("integral", "-n", "3", "--class", "s1^6", "--route", "localization", "--weights", "1,a,2"),
        ("integral", "-n", "2", "--class", "s1^4"),
        ("integral", "-n", "7", "--class", "s1"),
        ("qtilde", "-n", "3", "--a", "2,2"),
        ("structure", "-n", "2", "--a", "1", "--b", "1", "--c", "1"),
        ("qprod", "-n", "2", "--a", "2,1", "--b", "2,1"),
    ],
)
def test_invalid_input_exits_with_2(args):
    result = run(*args)
    assert result.exit_code == 2
    assert "error:" in result.output


@pytest.mark.parametrize("route", ["main", "dp"])
def test_weights_are_rejected_for_coefficient_routes(route):
    result = run("integral", "-n", "3", "--class", "s1^6", "--route", route, "--weights", "1,2,3")
    assert result.exit_code == 2
    assert f"not {route}" in result.output


def test_syntax_error_reports_position():
    result = run("integral", "-n", "3", "--class", "s1 + x")
    assert "at position 5" in result.output


def test_qtilde():
    result = run("qtilde", "-n", "4", "--a", "4,2,1")
    assert result.exit_code == 0
    assert last_line(result) == "s4*s2*s1 - 2*s4*s3"
    result = run("qtilde", "-n", "4", "--a", "4,2,1", "--pfaffian", "--json")
    assert json.loads(last_line(result)) == {"n": 4, "a": "4,2,1", "class": "s4*s2*s1 - 2*s4*s3"}


def test_structure_and_gw1():
    result = run("structure", "-n", "3", "--a", "2,1", "--b", "2", "--c", "3,2", "--json")
    assert json.loads(last_line(result)) == {"n": 3, "a": "2,1", "b": "2", "c": "3,2", "coef": 2}
    result = run("gw1", "-n", "2", "--a", "1", "--b", "2", "--c", "2,1")
    assert result.exit_code == 0
    assert last_line(result) == "1"


def test_qprod():
    result = run("qprod", "-n", "3", "--a", "2,1", "--b", "2")
    assert result.exit_code == 0
    assert last_line(result) == "2*s[3,2] + s[1]*q"
    result = run("qprod", "-n", "4", "--a", "3,2", "--b", "2,1")
    assert result.exit_code == 0
    assert last_line(result) == "2*s[4,3,1] + 2*s[3]*q + s[2,1]*q"
    result = run("qprod", "-n", "4", "--a", "3,2", "--b", "2,1", "--json")
    record = json.loads(last_line(result))
    assert record["classical"] == [{"gamma": "4,3,1", "coef": 2}]
    assert record["q1"] == [{"gamma": "3", "coef": 2}, {"gamma": "2,1", "coef": 1}]
    result = run("qprod", "-n", "1", "--a", "1", "--b", "1", "--json")
    assert json.loads(last_line(result)) == {
        "n": 1,
        "a": "1",
        "b": "1",
        "classical": [],
        "q1": [{"gamma": "", "coef": 1}],
    }


def test_rank_limit_from_environment():
    env = {"LGSCHUBERT_MAX_RANK": "2"}
    assert run("degree", "-n", "3", env=env).exit_code == 2
    assert run("degree", "-n", "2", env=env).exit_code == 0
    result = run("gw1", "-n", "2", "--a", "1", "--b", "2", "--c", "2,1", env=env)
    assert result.exit_code == 2
    assert "n=3" in result.output


def test_settings_file(tmp_path):
    cfg = tmp_path / "settings.json"
    cfg.write_text(json.dumps({"lgschubert": {"seed": 4, "trials": 2}}), encoding="utf-8")
    result = run("--config", str(cfg), "verify", "lemma1", "--json")
    assert result.exit_code == 0
    record = json.loads(last_line(result))
    assert (record["seed"], record["trials"], record["passed"]) == (4, 2, True)


def test_bad_settings_exit_with_2(tmp_path):
    cfg = tmp_path / "settings.json"
    cfg.write_text(json.dumps({"lgschubert": {"colour": "red"}}), encoding="utf-8")
    assert run("--config", str(cfg), "degree", "-n", "2").exit_code == 2
    assert run("--config", str(tmp_path / "settings.ini"), "degree", "-n", "2").exit_code == 2
    assert run("--workers", "0", "degree", "-n", "2").exit_code == 2


def test_verify_text():
    result = run("verify", "identity", "-n", "2", "--seed", "3", "--trials", "4")
    assert result.exit_code == 0
    assert last_line(result) == "identity n=2 seed=3 trials=4: ok"
    result = run("verify", "lemma1", "--seed", "3", "--trials", "5")
    assert last_line(result) == "lemma1 seed=3 trials=5: ok"


@pytest.mark.parametrize("target", ["lemma2", "reduction", "relation", "routes", "duality"])
def test_verify_targets(target):
    result = run("--workers", "2", "verify", target, "-n", "2", "--trials", "2", "--json")
    assert result.exit_code == 0
    assert json.loads(last_line(result))["passed"] is True


def test_failed_verification_exits_with_3(monkeypatch):
    failing = VerificationReport("identity", 2, 0, 1, ("trial 0: 1 != 2",))
    monkeypatch.setattr(cli, "verify_identity", lambda n, seed, trials: failing)
    result = run("verify", "identity")
    assert result.exit_code == 3
    assert "FAILED" in result.stdout
    assert "trial 0: 1 != 2" in result.stdout


def test_invariant_violation_exits_with_3(monkeypatch):
    def broken(n, route, workers=1):
        raise RouteMismatchError("degree of LG(2)", {"closed-form": 2, "main": 3})

    monkeypatch.setattr(cli, "degree_lg_via_integral", broken)
    result = run("degree", "-n", "2", "--check")
    assert result.exit_code == 3
    assert "internal check failed" in result.output


def test_verbose_flag_is_accepted():
    result = run("-v", "degree", "-n", "2")
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines()[-1] == "2"
