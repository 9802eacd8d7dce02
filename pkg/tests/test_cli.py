"""CLI behaviour: commands, formats, exit codes, golden table."""

import json
from pathlib import Path

import pytest

from schrijver.cli import main

GOLDEN = Path(__file__).parent / "data" / "table_k5.csv"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_enumerate_counts(capsys):
    code, out = run(capsys, "enumerate", "--n", "7", "--k", "3")
    assert code == 0
    assert out.splitlines() == [
        "1,3,5",
        "1,3,6",
        "1,4,6",
        "2,4,6",
        "2,4,7",
        "2,5,7",
        "3,5,7",
    ]
    code, out = run(capsys, "enumerate", "--n", "9", "--k", "4")
    assert code == 0 and len(out.splitlines()) == 9


def test_enumerate_empty_graph_exits_zero(capsys):
    code, out = run(capsys, "enumerate", "--n", "5", "--k", "3")
    assert code == 0 and out == ""


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--n", "7", "--k", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)[0] == "1,3,5"


def test_distance_examples(capsys):
    code, out = run(
        capsys, "distance", "--n", "10", "--k", "4", "--a", "1,3,5,7", "--b", "1,3,6,8"
    )
    assert (code, out) == (0, "3\n")
    code, out = run(
        capsys, "distance", "--n", "10", "--k", "4", "--a", "1,3,6,8", "--b", "1,4,6,9"
    )
    assert (code, out) == (0, "2\n")
    code, out = run(
        capsys, "distance", "--n", "10", "--k", "4", "--a", "1,3,5,7", "--b", "1,3,5,7"
    )
    assert (code, out) == (0, "0\n")


def test_distance_explain_has_certificate_and_decomposition(capsys):
    code, out = run(
        capsys,
        "distance",
        "--n", "10", "--k", "4",
        "--a", "1,3,5,7", "--b", "1,3,6,8",
        "--explain",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["distance"] == 3
    cert = payload["certificate"]
    assert len(cert["vertices"]) - 1 >= payload["distance"]
    assert payload["decomposition"]["h"] == 2
    assert payload["decomposition"]["distance2"] is False


def test_distance_trace_through_lift(capsys):
    code, out = run(
        capsys,
        "distance",
        "--n", "12", "--k", "5",
        "--a", "1,3,5,7,10", "--b", "1,3,6,8,11",
        "--explain", "--trace",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["distance"] == 4
    assert payload["lift_trace"]["steps"][0]["kind"] == "plus"
    levels = payload["lift_trace"]["levels"]
    assert levels[0]["n"] == 12


def test_distance_rejects_bad_set_text(capsys):
    code, _ = run(capsys, "distance", "--n", "10", "--k", "4", "--a", "3,1,5,7", "--b", "1,3,6,8")
    assert code == 3
    code, _ = run(capsys, "distance", "--n", "10", "--k", "4", "--a", "1,2,5,7", "--b", "1,3,6,8")
    assert code == 3


def test_diameter_formula_and_bfs(capsys):
    assert run(capsys, "diameter", "--n", "16", "--k", "7")[1] == "6\n"
    assert run(capsys, "diameter", "--n", "26", "--k", "7")[1] == "2\n"
    assert run(capsys, "diameter", "--n", "9", "--k", "4")[1] == "4\n"
    # interval regime resolves through BFS in auto mode
    code, out = run(capsys, "diameter", "--n", "17", "--k", "7")
    assert (code, out) == (0, "5\n")
    code, out = run(capsys, "diameter", "--n", "17", "--k", "7", "--method", "formula")
    assert (code, out) == (0, "[4..5]\n")
    code, out = run(capsys, "diameter", "--n", "12", "--k", "5", "--method", "bfs", "--format", "json")
    payload = json.loads(out)
    assert payload["lo"] == payload["hi"] == 4
    assert payload["method"] == "bfs"
    assert "witness" in payload


def test_table_matches_golden_file(capsys, tmp_path):
    out_path = tmp_path / "table.csv"
    code, _ = run(capsys, "table", "--k-max", "5", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == GOLDEN.read_text()


def test_table_deterministic(capsys):
    _, first = run(capsys, "table", "--k-max", "3")
    _, second = run(capsys, "table", "--k-max", "3")
    assert first == second
    assert first.startswith("# schrijver table v1")


def test_witness_commands(capsys):
    code, out = run(capsys, "witness", "--n", "12", "--k", "5", "--kind", "lower4")
    assert (code, out) == (0, "1,3,5,7,10\n1,3,6,8,11\n")
    code, out = run(
        capsys, "witness", "--n", "10", "--k", "4", "--kind", "dist3", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["a"] == "1,4,6,8"
    assert payload["certificate"]["claimed_bound"] == 3
    code, _ = run(capsys, "witness", "--n", "13", "--k", "5", "--kind", "lower4")
    assert code == 3


def test_verify_path_roundtrip(capsys, tmp_path):
    code, out = run(
        capsys, "witness", "--n", "10", "--k", "4", "--kind", "dist3", "--format", "json"
    )
    cert = json.loads(out)["certificate"]
    good = tmp_path / "cert.json"
    good.write_text(json.dumps(cert))
    code, out = run(capsys, "verify-path", "--file", str(good))
    assert code == 0 and out.startswith("ok")

    cert["vertices"][1] = "1,2,3,4"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(cert))
    code, _ = run(capsys, "verify-path", "--file", str(bad))
    assert code == 2

    malformed = tmp_path / "malformed.json"
    malformed.write_text("{}")
    code, _ = run(capsys, "verify-path", "--file", str(malformed))
    assert code == 3


def test_verify_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "model", "--k-max", "4")
    assert code == 0
    assert "pass" in out


def test_scan_output(capsys):
    code, out = run(capsys, "scan", "--k-max", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# schrijver scan v1")
    assert "evidence only" in lines[0]
    rows = [line.split(",") for line in lines[2:]]
    by_k = {}
    for row in rows:
        by_k.setdefault(int(row[0]), []).append(int(row[3]))
    for diams in by_k.values():
        assert diams == sorted(diams, reverse=True)


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
    code, _ = run(capsys, "enumerate", "--n", "99", "--k", "3")
    assert code == 3
