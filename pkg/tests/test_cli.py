import json

import pytest

from ehrhart_mckay import config
from ehrhart_mckay.components import method
from ehrhart_mckay.errors import ProjectionError
from ehrhart_mckay.interfaces.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


@pytest.mark.parametrize("argv, expected", [
    (("count", "--su", "3", "--level", "2"), "2"),
    (("count", "--algebra", "E8", "--level", "4"), "10"),
    (("count", "--so", "8", "--level", "4", "--method", "reps"), "16"),
    (("count", "--algebra", "A2", "--level", "0", "--method", "omega"), "1"),
    (("count", "--algebra", "D4", "--level", "2", "--method", "reps"), "5"),
    (("count", "--algebra", "A1", "--level", "0", "--method", "genfun"), "1"),
    (("count", "--algebra", "A2", "--level", "2", "--method", "brute"), "2"),
])
def test_count(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out.out.strip() == expected


def test_series_json_is_exact(capsys):
    code, out = run(capsys, "series", "--algebra", "A1", "--method", "genfun", "--terms", "6")
    assert code == 0
    assert out.out == '{"algebra":"A1","method":"genfun","truncation":6,"coefficients":["1","1","2","2","3","3","4"]}\n'


def test_series_json_round_trip(capsys):
    code, out = run(capsys, "series", "--so", "8", "--terms", "4", "--method", "omega")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["algebra"] == "D4"
    assert [int(c) for c in payload["coefficients"]] == [1, 1, 5, 6, 16]


def test_series_csv(capsys):
    code, out = run(capsys, "series", "--algebra", "A2", "--terms", "3", "--format", "csv")
    assert code == 0
    assert out.out == "algebra,q,count\nA2,0,1\nA2,1,1\nA2,2,2\nA2,3,4\n"


def test_count_json(capsys):
    code, out = run(capsys, "count", "--algebra", "D4", "--level", "2", "--format", "json")
    assert code == 0
    assert json.loads(out.out) == {"algebra": "D4", "method": "brute", "level": 2, "count": "5"}


def test_table(capsys):
    code, out = run(capsys, "table", "--algebra", "A1", "--algebra", "A2", "--terms", "3")
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0] == "algebra,q,count"
    assert len(lines) == 9
    assert lines[-1] == "A2,3,4"


def test_table_text_shows_all_states(capsys):
    code, out = run(capsys, "table", "--su", "3", "--terms", "2", "--format", "text")
    assert code == 0
    last = out.out.splitlines()[-1].split()
    assert last == ["A2", "2", "2", "6"]


@pytest.mark.parametrize("argv", [
    ("verify", "duality", "--su", "4", "--terms", "6"),
    ("verify", "levelrank", "--max", "8"),
    ("verify", "determinants", "--algebra", "E7"),
    ("verify", "omega-identities", "--terms", "8"),
])
def test_verify_passes(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out.out.rstrip().endswith("PASS")


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "determinants", "--algebra", "D6", "--format", "json")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["passed"] is True
    assert payload["mode"] == "determinants"


def test_verify_golden(capsys):
    code, _ = run(capsys, "verify", "golden")
    assert code == 0


def test_asymptotic_mismatch_exit_code(capsys):
    code, out = run(capsys, "verify", "asymptotic", "--algebra", "A2", "--level", "50", "--tolerance", "0")
    assert code == 1
    assert "FAIL" in out.out


@pytest.mark.parametrize("argv", [
    ("count", "--algebra", "B3", "--level", "2"),
    ("count", "--so", "7", "--level", "2"),
    ("count", "--algebra", "A2"),
    ("count", "--algebra", "E8", "--level", "2", "--method", "omega"),
    ("series", "--algebra", "D5", "--method", "genfun"),
    ("count", "--algebra", "A2", "--level", "-1"),
    ("series", "--algebra", "A2", "--terms", "0"),
    ("count", "--algebra", "A2", "--algebra", "A3", "--level", "1"),
    ("verify", "asymptotic", "--tolerance", "one"),
])
def test_usage_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2
    assert out.err


def test_omega_rank_guard_flag(capsys):
    code, out = run(capsys, "--omega-max-rank", "8", "count", "--algebra", "E6", "--level", "2", "--method", "omega")
    assert code == 0
    assert out.out.strip() == "3"
    code, _ = run(capsys, "--omega-max-rank", "2", "count", "--algebra", "A3", "--level", "2", "--method", "omega")
    assert code == 2


def test_dicyclic_series_from_genfun(capsys):
    code, out = run(capsys, "series", "--algebra", "D4", "--method", "genfun", "--terms", "2")
    assert code == 0
    assert json.loads(out.out)["coefficients"] == ["1", "1", "5"]


def test_omega_rank_flag_after_subcommand(capsys):
    code, out = run(capsys, "count", "--algebra", "E6", "--level", "2", "--method", "omega", "--omega-max-rank", "8")
    assert code == 0
    assert out.out.strip() == "3"
    code, _ = run(capsys, "series", "--algebra", "A3", "--method", "omega", "--terms", "2", "--omega-max-rank", "2")
    assert code == 2


def test_table_uses_capped_omega_truncation(capsys):
    code, out = run(capsys, "table", "--algebra", "D4", "--method", "omega")
    assert code == 0
    lines = out.out.splitlines()
    assert len(lines) == config.OMEGA_LARGE_RANK_TERMS + 2
    assert lines[-1].startswith(f"D4,{config.OMEGA_LARGE_RANK_TERMS},")


def test_table_json_reports_truncation_per_algebra(capsys):
    code, out = run(capsys, "table", "--algebra", "A1", "--algebra", "D4", "--method", "omega", "--format", "json")
    assert code == 0
    payload = json.loads(out.out)
    assert payload["truncation"] == {"A1": config.DEFAULT_TERMS, "D4": config.OMEGA_LARGE_RANK_TERMS}
    assert len(payload["rows"]) == config.DEFAULT_TERMS + config.OMEGA_LARGE_RANK_TERMS + 2


def test_internal_error_exit_code(capsys, monkeypatch):
    def broken(n, truncation):
        raise ProjectionError("coefficient 1/3 is not an integer")

    monkeypatch.setattr(method, "phi_su_series", broken)
    code, out = run(capsys, "count", "--algebra", "A2", "--level", "1", "--method", "genfun")
    assert code == 3
    assert "internal error" in out.err
    assert out.out == ""
