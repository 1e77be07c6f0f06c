import json
from pathlib import Path

import pytest

from affcell.analysis import analyze
from affcell.based_algebra import ba_dump
from affcell.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def s3_file(tmp_path, s3):
    path = tmp_path / "s3.json"
    ba_dump(s3, path)
    return path


@pytest.fixture
def corrupted_file(tmp_path, s3):
    path = tmp_path / "bad.json"
    ba_dump(s3.with_entry("cs", "ct", "cst", 2), path)
    return path


def test_gen_hecke(tmp_path):
    out = tmp_path / "h.json"
    assert main(["gen", "hecke", "--rank", "2", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["basis"]) == 6


def test_gen_qschur(tmp_path):
    out = tmp_path / "q.json"
    assert main(["gen", "qschur", "--n", "2", "--r", "2", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["basis"]) == 10


@pytest.mark.parametrize("argv", [
    ["gen", "hecke", "--rank", "9"],
    ["gen", "hecke"],
    ["gen", "qschur", "--n", "3", "--r", "3"],
    ["gen", "lattice"],
    ["analyze", "/nonexistent/table.json"],
    ["lr", "--lambda", "x", "--mu", "1", "--nu", "1"],
    ["lr", "--lambda", "1,2", "--mu", "1", "--nu", "1"],
    ["segments", "--r", "2", "--n", "1", "--alphabet", ""],
    ["dstat", "/nonexistent.json"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_malformed_table_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"basis": ["a"], "units": ["a"]}')
    assert main(["analyze", str(bad)]) == 2
    bad.write_text("{not json")
    assert main(["analyze", str(bad)]) == 2


def test_analyze_s3_text(s3_file, capsys):
    assert main(["analyze", str(s3_file)]) == 0
    out = capsys.readouterr().out
    assert "3 two-sided cells" in out
    assert "a = 0" in out and "a = 1" in out and "a = 3" in out
    assert "RESULT: P1-P4 verified" in out


def test_analyze_structured_is_byte_stable(s3_file, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["analyze", str(s3_file), "--format", "structured", "--out", str(a)]) == 0
    assert main(["analyze", str(s3_file), "--format", "structured", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() == (GOLDEN / "s3_report.json").read_bytes()
    doc = json.loads(a.read_text())
    assert doc["passed"] is True
    assert [sorted(set(c["a"].values())) for c in doc["cells"]] == [[3], [1], [0]]


def test_analyze_corrupted_exits_1_with_witness(corrupted_file, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["analyze", str(corrupted_file), "--format", "structured", "--out", str(out)]) == 1
    doc = json.loads(out.read_text())
    p3 = next(v for v in doc["global"] if v["name"] == "P3")
    assert p3["passed"] is False and len(p3["witness"]) == 5
    assert "P3" in capsys.readouterr().out


def test_analyze_options(s3_file, tmp_path):
    out = tmp_path / "r.json"
    argv = ["analyze", str(s3_file), "--format", "structured", "--out", str(out),
            "--seed", "5", "--max-exhaustive-rank", "3"]
    assert main(argv) == 0
    doc = json.loads(out.read_text())
    assert doc["options"] == {"max_exhaustive_rank": 3, "seed": 5}
    assert "sampled" in next(v for v in doc["global"] if v["name"] == "P3")["detail"]


def test_lr(capsys):
    assert main(["lr", "--lambda", "1", "--mu", "1", "--nu", "1,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_dstat(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"n": 2, "entries": [[1, 1, 2], [2, 2, 1]]}))
    assert main(["dstat", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "0"
    path.write_text(json.dumps({"n": 2, "entries": [[1, 3, 1], [2, 1, 1]]}))
    assert main(["dstat", str(path), "--verbose"]) == 0
    lines = capsys.readouterr().out.splitlines()
    # columns 3 and 1 are the same class mod 2
    assert lines[1:] == ["r(A) = [1, 1]", "c(A) = [2, 0]"]
    path.write_text(json.dumps({"n": 2}))
    assert main(["dstat", str(path)]) == 2


def test_segments(capsys):
    assert main(["segments", "--r", "2", "--n", "1", "--alphabet", "a"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 multisegment(s)"
    assert main(["segments", "--r", "2", "--n", "2", "--alphabet", "a"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "2 multisegment(s)"


def test_tensor(capsys):
    assert main(["tensor", "--a", "0,-1", "--b", "1,0"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1 x [1, -1]", "1 x [0, 0]"]


def test_analyze_api_matches_cli(s3, s3_file, tmp_path):
    out = tmp_path / "r.json"
    main(["analyze", str(s3_file), "--format", "structured", "--out", str(out)])
    assert analyze(s3).render_structured() == out.read_text()
