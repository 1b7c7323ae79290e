from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from lmcbound import formats
from lmcbound.cli import main

from conftest import (
    CYCLE_3,
    CYCLE_3_GATES,
    NOT_LINKABLE_4,
    TWO_BY_FOUR_5,
    VANISHING_MPRIME_5,
)


@pytest.fixture()
def runner():
    return CliRunner()


def write_matrix_file(tmp_path, m, name="matrix.txt"):
    path = tmp_path / name
    path.write_text(formats.write_matrix(m))
    return str(path)


def write_synthesis_file(tmp_path, n, gates, name="synth.txt"):
    path = tmp_path / name
    path.write_text(f"{n}\n" + "".join(f"{c} {t}\n" for c, t in gates))
    return str(path)


def test_bound_text(runner, tmp_path):
    path = write_matrix_file(tmp_path, CYCLE_3)
    result = runner.invoke(main, ["bound", path])
    assert result.exit_code == 0
    assert "bound" in result.output and "6" in result.output


def test_bound_json_and_middle_terms(runner, tmp_path):
    path = write_matrix_file(tmp_path, VANISHING_MPRIME_5)
    result = runner.invoke(main, ["bound", path, "--json", "--strengthen"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["bound"] == 4
    assert data["strengthened_bound"] == 4
    assert list(data) == sorted(data)
    for term in ("min", "row", "max"):
        r = runner.invoke(main, ["bound", path, "--json", "--middle-term", term])
        assert json.loads(r.output)["middle_term"] == term


def test_bound_parse_error_exits_2(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n11\n1x\n")
    result = runner.invoke(main, ["bound", str(path)])
    assert result.exit_code == 2
    result = runner.invoke(main, ["bound", str(tmp_path / "missing.txt")])
    assert result.exit_code == 2


def test_unknown_flag_rejected(runner, tmp_path):
    path = write_matrix_file(tmp_path, CYCLE_3)
    result = runner.invoke(main, ["bound", path, "--frobnicate"])
    assert result.exit_code == 2


def test_connectivity(runner, tmp_path):
    path = write_matrix_file(tmp_path, TWO_BY_FOUR_5)
    result = runner.invoke(main, ["connectivity", path])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "v=2 e=4"


def test_cperfect(runner, tmp_path):
    path = write_matrix_file(tmp_path, VANISHING_MPRIME_5)
    result = runner.invoke(main, ["cperfect", path])
    assert result.exit_code == 0
    assert "emp: 5" in result.output
    assert "middle_lower_bound: 0" in result.output
    assert "vacuous" in result.output


def test_rivers(runner, tmp_path):
    path = write_matrix_file(tmp_path, VANISHING_MPRIME_5)
    result = runner.invoke(main, ["rivers", path])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "count: 13"
    assert lines[1] == "12345"


def test_classify(runner, tmp_path):
    path = write_synthesis_file(tmp_path, 3, CYCLE_3_GATES)
    result = runner.invoke(main, ["classify", path])
    assert result.exit_code == 0
    assert "pattern: " in result.output
    assert "L=2 M=2 C=2" in result.output


def test_synth_perm_writes_file(runner, tmp_path):
    out = tmp_path / "cycle.synth"
    result = runner.invoke(
        main, ["synth-perm", "(1 2 3)", "--construction", "row2", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert "gates: 6" in result.output
    s = formats.parse_synthesis(out.read_text())
    assert s.replay() == CYCLE_3


def test_synth_perm_bad_notation(runner):
    result = runner.invoke(main, ["synth-perm", "not cycles"])
    assert result.exit_code == 2


def test_linkable_yes_no_error(runner, tmp_path):
    chain = tmp_path / "chain.txt"
    chain.write_text("3\n100\n110\n111\n")
    result = runner.invoke(main, ["linkable", str(chain)])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "LINKABLE"

    path = write_matrix_file(tmp_path, NOT_LINKABLE_4)
    result = runner.invoke(main, ["linkable", path])
    assert result.exit_code == 1
    assert "NOT LINKABLE (ReplayMismatch)" in result.output

    ident = tmp_path / "ident.txt"
    ident.write_text("3\n100\n010\n001\n")
    result = runner.invoke(main, ["linkable", str(ident)])
    assert result.exit_code == 2


def test_verify_optimal_and_gap(runner, tmp_path):
    mpath = write_matrix_file(tmp_path, CYCLE_3)
    spath = write_synthesis_file(tmp_path, 3, CYCLE_3_GATES)
    result = runner.invoke(main, ["verify", mpath, spath])
    assert result.exit_code == 0
    assert "verdict: OPTIMAL" in result.output

    padded = write_synthesis_file(
        tmp_path, 3, CYCLE_3_GATES + [(1, 2), (1, 2)], name="padded.txt"
    )
    result = runner.invoke(main, ["verify", mpath, padded])
    assert result.exit_code == 1
    assert "verdict: GAP 2" in result.output

    wrong = write_synthesis_file(tmp_path, 3, [(1, 2)], name="wrong.txt")
    result = runner.invoke(main, ["verify", mpath, wrong])
    assert result.exit_code == 1
    assert "verdict: MISMATCH" in result.output


def test_verify_dimension_mismatch(runner, tmp_path):
    mpath = write_matrix_file(tmp_path, CYCLE_3)
    spath = write_synthesis_file(tmp_path, 4, [(1, 2)])
    result = runner.invoke(main, ["verify", mpath, spath])
    assert result.exit_code == 2


def test_census_writes_reports(runner, tmp_path):
    result = runner.invoke(main, ["census", "--n", "3", "--out", str(tmp_path)])
    assert result.exit_code == 0
    assert "total: 168" in result.output
    for name in ("sizes_n3.csv", "confusion_n3.csv", "heatmap_n3.csv", "metrics_n3.json"):
        assert (tmp_path / name).exists()
    met = json.loads((tmp_path / "metrics_n3.json").read_text())
    assert met["delta0"] == 1.0
    assert met["middle_term"] == "max"


def test_census_cache_roundtrip(runner, tmp_path):
    cache = tmp_path / "table.lmc"
    result = runner.invoke(
        main, ["census", "--n", "3", "--out", str(tmp_path), "--cache", str(cache)]
    )
    assert result.exit_code == 0
    assert cache.exists()
    # second run loads the cache instead of rebuilding
    result = runner.invoke(
        main, ["census", "--n", "3", "--out", str(tmp_path), "--cache", str(cache)]
    )
    assert result.exit_code == 0


def test_census_cache_dir_env(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("LMC_CACHE_DIR", str(tmp_path / "cachedir"))
    result = runner.invoke(main, ["census", "--n", "3", "--out", str(tmp_path)])
    assert result.exit_code == 0
    assert (tmp_path / "cachedir" / "sizes_n3.lmc").exists()


def test_census_deterministic_output(runner, tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        result = runner.invoke(main, ["census", "--n", "3", "--out", str(out)])
        assert result.exit_code == 0
    for name in ("sizes_n3.csv", "confusion_n3.csv", "heatmap_n3.csv", "metrics_n3.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
