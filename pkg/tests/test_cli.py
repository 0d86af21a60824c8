import json
import subprocess
import sys

import pytest

from ucycle.cli import run

S1 = '{"n": 3, "k": 5, "family": {"type": "ascending_rotations"}}'
S2 = '{"n": 2, "k": 9, "family": {"type": "no_primes"}}'
T42 = '{"n": 4, "k": 2, "family": {"type": "full"}}'


@pytest.fixture
def spec_file(tmp_path):
    def make(text):
        p = tmp_path / "spec.json"
        p.write_text(text)
        return str(p)
    return make


def test_greedy_text(spec_file, capsys):
    assert run(["greedy", "--spec", spec_file(S1), "--alpha", "534"]) == 0
    assert capsys.readouterr().out.strip() == "(534)123124134234512513514523524534"


def test_greedy_json(spec_file, capsys):
    assert run(["greedy", "--spec", spec_file(S2), "--alpha", "99", "--format", "json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["missing"] == ["77", "78", "87", "88"]
    assert out["stream"] == "33621224251526394454648182728496556685758699"
    assert out["completed"] is True


def test_greedy_defaults_to_top_word(capsys):
    assert run(["greedy", "--spec", T42]) == 0
    assert capsys.readouterr().out.strip() == "(2222)1111211221212222"


def test_verify(spec_file, capsys):
    assert run(["verify", "--spec", spec_file(S1), "--cycle",
                "123124134234512513514523524534"]) == 0
    assert run(["verify", "--spec", S1, "--cycle", "123"]) == 1
    assert run(["verify", "--spec", S1, "--cycle", "123", "--format", "json"]) == 1
    out = capsys.readouterr().out.strip().splitlines()[-1]
    assert json.loads(out)["length_matches"] is False


def test_increasable(capsys):
    assert run(["increasable", "--spec", S2, "--alpha", "99", "--word", "57"]) == 0
    lines = capsys.readouterr().out.split()
    assert lines[0] == "true" and lines[-1] == "99"
    assert run(["increasable", "--spec", S2, "--alpha", "99", "--word", "77"]) == 1
    capsys.readouterr()
    assert run(["increasable", "--spec", S2, "--alpha", "99"]) == 0
    listed = capsys.readouterr().out.split()
    assert len(listed) == 44 and listed == sorted(listed) and "77" not in listed


def test_game_solve(capsys):
    assert run(["game", "solve", "--spec", T42, "--alpha", "2222"]) == 0
    captured = capsys.readouterr()
    rows = dict(line.split("\t") for line in captured.out.splitlines())
    assert rows["2212"] == "11" and rows["2222"] == "16"
    assert run(["game", "solve", "--spec", S2, "--alpha", "99"]) == 0
    rows = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    assert rows["77"] == "INF"
    assert run(["game", "solve", "--spec", S2, "--alpha", "99", "--format", "json",
                "--method", "retrograde"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["r_alpha_start"] == 44 and out["remoteness"]["88"] is None


def test_game_line(capsys):
    assert run(["game", "line", "--spec", T42, "--alpha", "2222", "--from", "2212"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 11
    assert lines[0].split("\t")[:3] == ["2212", "1221", "warden-decrease"]
    assert lines[1].split("\t")[:3] == ["1221", "1122", "prisoner-after-pass"]
    assert run(["game", "line", "--spec", S2, "--alpha", "99", "--from", "77"]) == 1


def test_game_refuses_non_closed(capsys):
    spec = '{"n": 2, "k": 2, "family": {"type": "explicit", "words": ["12", "22"]}}'
    assert run(["game", "solve", "--spec", spec, "--alpha", "22"]) == 2
    assert "rotations" in capsys.readouterr().err


def test_fkm(capsys):
    spec = '{"n": 3, "k": 3, "family": {"type": "full"}}'
    assert run(["fkm", "--spec", spec, "--check-greedy-equal"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1 112 113 122 123 132 133 2 223 233 3"
    assert out[1] == "111211312212313213322232333"
    assert out[-1] == "greedy-equal"


def test_sweeps(capsys):
    assert run(["sweep", "conjecture1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert all(set(json.loads(x)) == {"instance", "verdict", "missing", "seed"} for x in lines)
    assert run(["sweep", "conjecture2", "--trials", "20", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert run(["sweep", "conjecture2", "--trials", "20", "--seed", "9"]) == 0
    assert capsys.readouterr().out == first
    assert run(["sweep", "forbidden-suffix", "--n", "4"]) == 0
    assert run(["demo", "union-intersection"]) == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["greedy"],
        ["greedy", "--spec", "/nonexistent.json"],
        ["greedy", "--spec", "{not json"],
        ["greedy", "--spec", S1, "--alpha", "111"],
        ["greedy", "--spec", '{"n": 2, "k": 3, "family": {"type": "no_primes"}}'],
        ["verify", "--spec", S1],
        ["sweep", "forbidden-suffix", "--n", "3"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ucycle", "greedy", "--spec", S1, "--alpha", "534"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(534)123124134234512513514523524534"
