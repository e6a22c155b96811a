import json
import subprocess
import sys

import pytest

from perfdiv import cli, verification
from perfdiv.core import graph_from_edges, named


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "perfdiv", *args], input=stdin,
                          capture_output=True, text=True)


def test_check_figure1_json():
    res = run("check", "--name", "figure1", "--format", "json")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["graph6"] == "IhaWOC@BG"
    assert rep["omega"]["value"] == 3 and rep["chi"]["value"] == 3
    assert rep["perfection"]["perfect"] is False
    assert rep["perfectly_divisible"]["holds"] is True
    assert rep["two_divisible"]["holds"] is False
    assert rep["pattern_free"]["K2,3"]["free"] is True


@pytest.mark.parametrize("argv", [
    ["check", "Dhc"], ["check", "--edges", "5:0-1,1-2,2-3,3-4,4-0"],
])
def test_check_inputs(argv, capsys):
    assert cli.main(argv) == 0
    assert "Dhc" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["check", "!!"], ["check", "--edges", "3:0-x"], ["check", "--edges", "3:0-3"],
    ["check", "--name", "nonesuch"], ["check"],
    ["scan", "--conjecture", "Z1", "--all-n", "3"], ["scan", "--conjecture", "C4.1", "--all-n", "9"],
    ["scan", "--conjecture", "C4.1", "--input", "/nonexistent/file"],
    ["gen", "--all-n", "8"], ["gen", "--random", "5", "x", "1"], ["gen", "--glued", "0", "2", "1", "0.5", "1"],
    ["verify-paper", "--only", "42"],
])
def test_input_errors_exit_2(argv, capsys):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_check_too_large_is_skipped_not_crashed(capsys, monkeypatch):
    monkeypatch.setenv("PERFDIV_MAX_N", "5")
    assert cli.main(["check", "--name", "petersen", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert "skipped" in rep["chi"]


def test_gen_all_n(capsys):
    assert cli.main(["gen", "--all-n", "4"]) == 0
    assert len(capsys.readouterr().out.split()) == 11


def test_gen_is_reproducible():
    a = run("gen", "--glued", "3", "3", "2", "0.5", "9")
    b = run("gen", "--glued", "3", "3", "2", "0.5", "9")
    assert a.returncode == 0 and a.stdout == b.stdout and len(a.stdout.split()) == 1


def test_scan_stdin_with_bad_line():
    res = run("scan", "--conjecture", "C4.2", "--input", "-", "--format", "json", stdin="Dhc\n@@@\n")
    assert res.returncode == 2
    rep = json.loads(res.stdout)
    assert rep["scanned"] == 1 and rep["errors"][0]["line"] == 2


def test_scan_all_n_counts(capsys):
    assert cli.main(["scan", "--conjecture", "T1.3", "--all-n", "7", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "scanned 1253" in out and "duration" not in out


def test_scan_jobs_invariance():
    args = ["scan", "--conjecture", "C4.6", "--all-n", "5", "--format", "json", "--no-timing"]
    one = run(*args, "--jobs", "1")
    two = run(*args, "--jobs", "2")
    assert one.returncode == two.returncode == 0
    assert json.loads(one.stdout) | {"params": None} == json.loads(two.stdout) | {"params": None}


def test_verify_quick_is_deterministic():
    a = run("verify-paper", "--quick", "--only", "1,5,8,9")
    b = run("verify-paper", "--quick", "--only", "1,5,8,9")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.count("[PASS]") == 4


def test_verify_fails_on_mutated_counterexample(monkeypatch, capsys):
    g = named("figure1")
    mutated = graph_from_edges(10, list(g.edges()) + [(1, 3)])

    def fake(key):
        return mutated if key == "figure1" else named(key)

    monkeypatch.setattr(verification, "named", fake)
    assert cli.main(["verify-paper", "--only", "1"]) == 1
    assert "[FAIL] 1" in capsys.readouterr().out
