import hashlib
from pathlib import Path

import pytest

from pokersim.cli import EXIT_OK, EXIT_RULES, EXIT_USAGE, main

BIG_POT = Path(__file__).resolve().parent.parent / "scripts" / "million-dollar-pot.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["standard-high", "AsKsQsJsTs"], "straight flush\tAsKsQsJsTs\t7462"),
        (["badugi", "AsKsQsJs"], "\t"),
        (["omaha-holdem", "Ts9s2c3d", "8s7s6hKdQc"], "straight\t"),
        (["eight-or-better-low", "AsKdQhJsTs"], "no qualifying hand"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == EXIT_OK
    assert expected in out


def test_eval_omaha_paths_agree(capsys):
    _, whole, _ = run(capsys, "eval", "omaha-holdem", "Ts9s2c3d", "8s7s6hKdQc")
    _, again, _ = run(capsys, "eval", "omaha-holdem", "Ts9s2c3d", "KdQc8s7s6h")
    assert whole == again


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "no-such-type", "AsKs"],
        ["eval", "standard-high", "AsAs"],
        ["eval", "standard-high", "AsKs"],
        ["frobnicate"],
        [],
        ["dump", "standard"],
        ["bench", "standard", "--mode", "all-6-card"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == EXIT_USAGE


def test_replay_big_pot(capsys):
    code, out, _ = run(capsys, "replay", str(BIG_POT))
    assert code == EXIT_OK
    assert out.splitlines() == [
        "pot 1500", "pot 49500", "pot 119500", "pot 1681600", "572100 1997500 1109500",
    ]


def test_replay_rule_violation(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text(BIG_POT.read_text().replace("complete-bet-raise-to 23000", "complete-bet-raise-to 8000"))
    code, _, err = run(capsys, "replay", str(bad))
    assert code == EXIT_RULES
    assert "line 13" in err


def test_replay_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("variant texas-holdem\nstacks 1 1\nshuffle\n")
    assert run(capsys, "replay", str(bad))[0] == EXIT_USAGE


def test_replay_missing_file(tmp_path, capsys):
    assert run(capsys, "replay", str(tmp_path / "nope.txt"))[0] == EXIT_USAGE


def test_dump_kuhn(tmp_path, capsys):
    path = tmp_path / "kuhn.txt"
    code, out, _ = run(capsys, "dump", "kuhn", "--output", str(path))
    assert code == EXIT_OK
    data = path.read_bytes()
    assert out.split()[0] == hashlib.md5(data).hexdigest()
    assert len(data.decode().splitlines()) == 3


def test_bench_kuhn(capsys):
    code, out, _ = run(capsys, "bench", "kuhn")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "hands 3"
    assert out.rstrip().endswith("ok")


def test_bench_seven_needs_five_card_lookup(capsys):
    assert run(capsys, "bench", "badugi", "--mode", "all-7-card")[0] == EXIT_USAGE
