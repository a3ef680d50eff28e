import json
from math import comb

import pytest

import cli
from src.commands import handlers
from src.commands import verify as verify_module
from src.core.exceptions import InconsistencyError, InvalidParameterError
from src.series.exact_series import Series
from src.series.strip_solver import LengthSeries


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_count_all_methods_agree(capsys):
    code, payload = run_json(capsys, "count", "--k", "2", "--t", "1", "--n", "2", "--method", "all")
    assert code == 0
    assert payload["command"] == "count"
    assert payload["result"]["counts"] == {"formula": "7", "series": "7", "brute": "7", "simple": "7"}
    assert payload["result"]["agree"] is True

    code, payload = run_json(capsys, "count", "--k", "1", "--t", "2", "--n", "2", "--method", "all")
    assert code == 0
    assert set(payload["result"]["counts"].values()) == {"6"}


def test_count_default_method(capsys):
    code, payload = run_json(capsys, "count", "--k", "1", "--t", "0", "--n", "0")
    assert code == 0
    assert payload["result"]["counts"] == {"formula": "1"}
    assert payload["parameters"]["k"] == "1"


def test_big_counts_stay_exact(capsys):
    code, payload = run_json(capsys, "count", "--k", "1", "--t", "0", "--n", "60")
    assert code == 0
    assert payload["result"]["counts"]["formula"] == str(comb(120, 60) // 61)


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--k", "1", "--t", "2", "--nmax", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "n,length,count,unbounded_power",
        "0,0,1,1",
        "1,2,2,3",
        "2,4,6,9",
        "3,6,19,28",
    ]


def test_dpoly(capsys):
    code, payload = run_json(capsys, "dpoly", "--k", "1", "--m", "5")
    assert code == 0
    assert payload["result"]["coeffs"] == ["1", "-4", "3"]


def test_ratio_limit_row(capsys):
    code, out, _ = run(capsys, "ratio", "--k", "1", "--t", "2", "--nmax", "50", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "limit,3,4,0.75"


def test_dist_csv(capsys):
    code, out, _ = run(capsys, "dist", "--t", "2", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s,J,mass_num,mass_den,mass_float"
    assert lines[1].startswith("0,2,6,9,0.666")
    assert lines[2].startswith("1,4,2,9,0.222")
    assert lines[3].startswith("2,6,1,9,0.111")


def test_dist_limit(capsys):
    code, payload = run_json(capsys, "dist", "--t", "2", "--limit", "--M", "1")
    assert code == 0
    assert payload["result"]["residual"]["num"] == "1"
    assert payload["result"]["residual"]["den"] == "16"
    assert len(payload["rows"]) == 2


def test_dist_needs_n_or_limit(capsys):
    code, _, err = run(capsys, "dist", "--t", "2")
    assert code == 1
    assert "required" in err


def test_strip_agrees(capsys):
    code, payload = run_json(capsys, "strip", "--k", "2", "--t", "2", "--h", "1", "--i", "-2", "--len", "10")
    assert code == 0
    assert payload["result"]["agree"] is True
    assert len(payload["rows"]) == 11


def test_strip_mismatch_exits_2(capsys, monkeypatch):
    def broken(spec):
        return LengthSeries(spec.k, 0, Series([7], spec.N))

    monkeypatch.setattr(handlers, "phi_series_cramer", broken)
    code, payload = run_json(capsys, "strip", "--k", "1", "--t", "0", "--h", "1", "--i", "0", "--len", "4")
    assert code == 2
    assert payload["result"]["agree"] is False


def test_biject_path_and_tuple(capsys):
    code, payload = run_json(capsys, "biject", "--k", "1", "--t", "1", "--path", "DU")
    assert code == 0
    assert payload["result"]["tuple"] == ["UD", ""]
    assert payload["result"]["lifted"] == "UDU"

    code, payload = run_json(capsys, "biject", "--k", "1", "--tuple", '["UD", ""]')
    assert code == 0
    assert payload["result"]["path"] == "DU"
    assert payload["parameters"]["t"] == "1"


def test_biject_rejects_large_t(capsys):
    code, payload = run_json(capsys, "biject", "--k", "1", "--t", "2", "--path", "DDUU")
    assert code == 1
    assert payload["result"]["type"] == "BijectionError"


def test_split_fg(capsys):
    code, payload = run_json(capsys, "split-fg", "--k", "1", "--t", "2", "--path", "UDUU")
    assert code == 0
    assert payload["result"]["F"] == "UDUU"
    assert payload["result"]["J"] == "4"

    code, payload = run_json(capsys, "split-fg", "--k", "1", "--t", "2", "--path", "DU", "--lift")
    assert payload["result"]["q"] == "UUDU"
    assert payload["result"]["F"] == "UU"


def test_levels(capsys):
    code, out, _ = run(capsys, "levels", "--k", "3", "--path", "UDU", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["x,level", "0,0", "1,1", "2,-2", "3,-1"]


def test_parse_error_exits_1(capsys):
    code, payload = run_json(capsys, "levels", "--k", "1", "--path", "UXD")
    assert code == 1
    assert payload["result"]["type"] == "PathParseError"


def test_invalid_parameters_exit_1(capsys):
    code, payload = run_json(capsys, "count", "--k", "1", "--t", "-1", "--n", "2")
    assert code == 1
    assert payload["result"]["type"] == "InvalidParameterError"


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "count", "--k", "1")[0] == 1
    assert run(capsys, "count", "--k", "1", "--t", "0", "--n", "1", "--method", "magic")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_zero_k_exits_1(capsys):
    code, payload = run_json(capsys, "count", "--k", "0", "--t", "1", "--n", "1")
    assert code == 1
    assert payload["result"]["type"] == "InvalidParameterError"
    for command in (["table", "--nmax", "3"], ["ratio", "--nmax", "3"]):
        code, payload = run_json(capsys, command[0], "--k", "0", "--t", "1", *command[1:])
        assert code == 1
        assert payload["result"]["type"] == "InvalidParameterError"


def test_biject_rejects_empty_tuple(capsys):
    code, payload = run_json(capsys, "biject", "--k", "1", "--tuple", "[]")
    assert code == 1
    assert payload["result"]["type"] == "ValidationError"


def test_parser_description_follows_settings(monkeypatch):
    monkeypatch.setenv("KDYCK_APP_NAME", "custom title")
    assert cli.build_parser().description == "custom title"


def test_brute_guard(capsys, monkeypatch):
    monkeypatch.setenv("KDYCK_BRUTE_LIMIT", "8")
    code, payload = run_json(capsys, "count", "--k", "1", "--t", "0", "--n", "5", "--method", "brute")
    assert code == 1
    assert payload["result"]["type"] == "ResourceLimitError"


def test_inconsistency_exits_2(capsys, monkeypatch):
    def broken(k, t, n):
        raise InconsistencyError("sum and recursion differ")

    monkeypatch.setattr(handlers, "count_general", broken)
    code, payload = run_json(capsys, "count", "--k", "1", "--t", "0", "--n", "3")
    assert code == 2
    assert payload["result"]["type"] == "InconsistencyError"


def test_output_is_deterministic(capsys):
    first = run(capsys, "ratio", "--k", "2", "--t", "3", "--nmax", "6")[1]
    second = run(capsys, "ratio", "--k", "2", "--t", "3", "--nmax", "6")[1]
    assert first == second


def test_verify_quick(capsys):
    code, payload = run_json(capsys, "verify", "--profile", "quick")
    assert code == 0, payload["result"]["failed"]
    assert [row["check"] for row in payload["rows"]] == [name for name, _ in verify_module.CHECKS]
    assert all(row["passed"] for row in payload["rows"])


def test_verify_reports_failures(capsys, monkeypatch):
    def failing(profile):
        raise AssertionError("forced")

    monkeypatch.setattr(verify_module, "CHECKS", [("always-fails", failing)])
    code, payload = run_json(capsys, "verify")
    assert code == 2
    assert payload["result"]["failed"] == ["always-fails"]
    assert payload["rows"][0]["detail"] == "forced"


def test_verify_unknown_profile():
    with pytest.raises(InvalidParameterError):
        verify_module.make_profile("slow")


def test_verify_runs_strip_and_limit_identities(capsys):
    code, payload = run_json(capsys, "verify", "--profile", "quick")
    rows = {row["check"]: row for row in payload["rows"]}
    for name in ("strip-limit", "f-part-routes", "strip-totals", "monotone-t"):
        assert rows[name]["passed"], rows[name]["detail"]
