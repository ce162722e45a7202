import json
import subprocess
import sys
from pathlib import Path

import pytest

from vbraid.cli import main
from vbraid.gauss import canonical_form, parse_gauss, to_text

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["gauss", "-n", "2", "s1"], "n=2; perm=2,1; arrows=(1>2:+)\n"),
        (["gauss", "-n", "2", ""], "n=2; perm=1,2; arrows=\n"),
        (["gauss", "-n", "2", "t1 t1"], "n=2; perm=1,2; arrows=\n"),
        (["genus", "-n", "2", "s1 t1"], "0\n"),
        (["genus", "-n", "3", "s1 s2"], "0\n"),
        (["genus", "-n", "2", "t1 s1 t1 s1"], "0\n"),
        (["genus", "-n", "3", "t2 s1 s1' t2"], "1\n"),
        (["realize", "n=3; perm=1,2,3; arrows="], "\n"),
        (["realize", "n=3; perm=1,2,3; arrows=(1>3:+)"], "t2 s1 t1 t2\n"),
    ],
)
def test_stdout_examples(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["equal", "--vm", "-n", "4", "s1 t3", "t3 s1"], 0),
        (["equal", "--reid", "-n", "3", "s1 s2 s1", "s2 s1 s2"], 0),
        (["equal", "--vm", "-n", "2", "s1", "s1'"], 1),
        (["equal", "--reid", "-n", "2", "s1", "t1"], 1),
        (["equal", "--reid", "--budget", "1", "--slack", "0", "-n", "3", "s1 s2 s1'", "s2' s1 s2"], 2),
    ],
)
def test_equal_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bad_input_exit(capsys):
    code, out, err = run(capsys, "gauss", "-n", "2", "s5")
    assert code == 3 and out == "" and "error" in err
    code, out, err = run(capsys, "word", "-n", "2", "q1")
    assert code == 3 and out == ""


def test_minimize(capsys):
    code, out, _ = run(capsys, "genus", "-n", "3", "--minimize", "t2 s1 s1' t2")
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_selftest_pv(capsys):
    code, out, _ = run(capsys, "selftest", "pv", "-n", "3")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["passed"] == report["total"] == 6
    code, out, _ = run(capsys, "selftest", "pv", "-n", "2")
    assert code == 0 and json.loads(out)["total"] == 0


def test_selftest_roundtrip_seeded(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "selftest", "roundtrip", "--trials", "10", "--seed", "7")
        data = json.loads(out)
        assert code == 0 and data["passed"] == data["total"] == 10
        data.pop("seconds")
        outs.append(data)
    assert outs[0] == outs[1]


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["word", "-n", "4", "s1 t2 s3' s1'"], "word.txt"),
        (["word", "-n", "4", "--json", "s1 t2 s3' s1'"], "word.json"),
        (["gauss", "-n", "3", "s1 s2 s1' t1"], "gauss.txt"),
        (["gauss", "-n", "3", "--json", "s1 s2 s1' t1"], "gauss.json"),
        (["export", "-n", "2", "s1 t1"], "ribbon_s1_t1.txt"),
        (["equal", "--reid", "-n", "3", "--json", "s1 s2 s1", "s2 s1 s2"], "trace_braid_relation.json"),
    ],
)
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_word_json_input(capsys):
    text = (GOLDEN / "word.json").read_text()
    assert run(capsys, "word", "-n", "4", text)[1] == (GOLDEN / "word.txt").read_text()


def test_realize_accepts_json(capsys):
    code, out, _ = run(capsys, "realize", (GOLDEN / "gauss.json").read_text())
    assert code == 0
    code, again, _ = run(capsys, "gauss", "-n", "3", "--canonical", out.strip())
    code, direct, _ = run(capsys, "gauss", "-n", "3", "--canonical", "s1 s2 s1' t1")
    assert again == direct


def test_realize_gauss_pipe():
    gauss = "n=4; perm=2,4,1,3; arrows=(1>3:+)(2>4:-)(4>1:+)"
    cmd = [sys.executable, "-m", "vbraid"]
    word = subprocess.run(cmd + ["realize"], input=gauss, capture_output=True, text=True, check=True).stdout
    back = subprocess.run(cmd + ["gauss", "-n", "4", "--canonical"], input=word,
                          capture_output=True, text=True, check=True).stdout
    assert back.strip() == to_text(canonical_form(parse_gauss(gauss)))
