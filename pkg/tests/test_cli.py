"""Command-line interface: pipelines, formats, caching, comparison."""

import json
import os

import pytest

from symhom import cli
from symhom.betti import BettiTable
from symhom.freealg import dual_numbers_resolution


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hs_dg_human(capsys):
    code, out, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "dg",
                       "--deg-cap", "3", "--weight-cap", "5")
    assert code == 0
    assert "h\\w" in out and "total" in out


def test_hs_json_format(capsys):
    code, out, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "dg",
                       "--deg-cap", "3", "--weight-cap", "5",
                       "--format", "json")
    assert code == 0
    table = BettiTable.from_json(out)
    assert table.get(0, 0) == 1 and table.get(2, 3) == 1


def test_hs_csv_format(capsys):
    code, out, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "dg",
                       "--deg-cap", "2", "--weight-cap", "3",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("hdeg,")
    assert len(lines) == 4


def test_hs_bar_pipeline(capsys):
    code, out, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "bar",
                       "--deg-cap", "2", "--weight-cap", "4",
                       "--format", "json")
    assert code == 0
    assert BettiTable.from_json(out).get(0, 1) == 1


def test_hs_cobar_and_closed_form(capsys):
    code1, out1, _ = run(capsys, "hs", "sl2", "--pipeline", "cobar",
                         "--deg-cap", "3", "--weight-cap", "4",
                         "--format", "json")
    code2, out2, _ = run(capsys, "hs", "sl2", "--pipeline", "closed-form",
                         "--deg-cap", "3", "--weight-cap", "4",
                         "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_hr_command(capsys):
    code, out, _ = run(capsys, "hr", "free:1", "--n", "2",
                       "--deg-cap", "2", "--weight-cap", "3",
                       "--format", "json")
    assert code == 0
    table = BettiTable.from_json(out)
    assert table.degree_total(1) == table.degree_total(2) == 0


def test_hs0_hc0_commands(capsys):
    code, out, _ = run(capsys, "hs0", "dual-numbers", "--format", "json")
    assert code == 0 and json.loads(out) == 2
    code, out, _ = run(capsys, "hc0", "m2", "--format", "json")
    assert code == 0 and json.loads(out) == 1


def test_ce_command(capsys):
    code, out, _ = run(capsys, "ce", "sl2", "--deg-cap", "3")
    assert code == 0
    assert out.strip() == "[1, 0, 0, 1]"


def test_deltas_compose(capsys):
    code, out, _ = run(capsys, "deltaS", "compose",
                       "(x1 x0)|(x2)", "(x0 x1)")
    assert code == 0
    assert out.strip() == "(x1 x0 x2)"


def test_deltas_factor(capsys):
    code, out, _ = run(capsys, "deltaS", "factor", "(x1 x0)|(x2)")
    assert code == 0
    assert "sigma:" in out and "monotone: (x0 x1)|(x2)" in out


def test_deltas_psi(capsys):
    code, out, _ = run(capsys, "deltaS", "psi", "(x1 x0)|(x2)")
    assert code == 0
    assert "X0 -> x1 x0" in out and "X1 -> x2" in out


def test_deltas_arity_error_is_graceful(capsys):
    code, _, err = run(capsys, "deltaS", "compose",
                       "(x1 x0)|(x2)", "(x0)|(x2 x1)")
    assert code == 2
    assert err.startswith("error:")


def test_compare_agreement(capsys):
    spec = "hs dual-numbers --pipeline %s --deg-cap 2 --weight-cap 4"
    code, out, _ = run(capsys, "compare", spec % "dg", spec % "bar")
    assert code == 0
    assert "agree" in out


def test_compare_mismatch(capsys):
    left = "hs dual-numbers --pipeline dg --deg-cap 2 --weight-cap 4"
    right = "hs free:1 --pipeline bar --deg-cap 2 --weight-cap 4"
    code, out, _ = run(capsys, "compare", left, right)
    assert code == 1
    assert "mismatch" in out


def test_cache_round_trip(tmp_path, capsys):
    args = ("hs", "dual-numbers", "--pipeline", "dg", "--deg-cap", "2",
            "--weight-cap", "4", "--format", "json",
            "--cache-dir", str(tmp_path))
    code1, out1, _ = run(capsys, *args)
    files = os.listdir(tmp_path)
    assert code1 == 0 and len(files) == 1
    record = json.loads((tmp_path / files[0]).read_text())
    assert "result" in record and "wall_time" in record
    code2, out2, _ = run(capsys, *args)
    assert code2 == 0 and out2 == out1  # byte-identical replay


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SYMHOM_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "dg",
                     "--deg-cap", "1", "--weight-cap", "2")
    assert code == 0
    assert os.listdir(tmp_path)


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def test_unknown_input_exits(capsys):
    with pytest.raises(SystemExit):
        cli.main(["hs", "no-such-thing", "--pipeline", "bar"])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0


def test_json_input_round_trip(tmp_path, capsys):
    path = tmp_path / "res.json"
    path.write_text(dual_numbers_resolution(3).to_json())
    code, out, _ = run(capsys, "hs", str(path), "--deg-cap", "2",
                       "--weight-cap", "4", "--format", "json")
    code2, out2, _ = run(capsys, "hs", "dual-numbers", "--pipeline", "dg",
                         "--deg-cap", "2", "--weight-cap", "4",
                         "--format", "json")
    assert code == code2 == 0
    assert out == out2
