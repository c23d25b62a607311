import json
import subprocess
import sys

import pytest

from inertialk.cli import dispatch


def run(argv, capsys):
    code = dispatch(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_lines_n2(capsys):
    code, out, _ = run(["lines", "--n", "2", "--emit", "json"], capsys)
    assert code == 0
    assert len(json.loads(out)["data"]) == 4


def test_lines_n3_field3(capsys):
    code, out, _ = run(["lines", "--n", "3", "--field", "3", "--emit", "json"], capsys)
    assert code == 0
    data = json.loads(out)["data"]
    assert len(data) == 27
    term = data[0][0]
    assert set(term) == {"sector", "exp", "coeff"} and set(term["coeff"]) == {"N", "c"}


def test_lines_text(capsys):
    code, out, _ = run(["lines", "--n", "2"], capsys)
    assert code == 0 and out.startswith("4 orbit representatives")


def test_verify_all_n2(capsys):
    code, out, _ = run(["verify", "--suite", "all", "--n", "2"], capsys)
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["ring", "--n", "1"],
    ["ring", "--emit", "xml"],
    ["verify", "--suite", "nope"],
    ["lines", "--n", "3"],
    ["bg", "--orders", "1"],
    ["hkrc", "--n", "4"],
    ["ring", "--field", "0"],
    [],
])
def test_flag_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "error" in err


@pytest.mark.parametrize("cmd", [["ring"], ["chow"], ["chern", "--n", "3"], ["psi", "--trunc", "3"],
                                 ["bg"], ["bg", "--orders", "2", "3"], ["hkrc", "--n", "2"]])
def test_commands_pass(cmd, capsys):
    code, out, _ = run(cmd + ["--emit", "json"], capsys)
    assert code == 0
    rows = json.loads(out)["report"]
    assert rows and all(r["pass"] for r in rows)


def test_json_is_deterministic(capsys):
    outs = [run(["chern", "--n", "2", "--emit", "json"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.dumps(json.loads(outs[0]), indent=2, sort_keys=True) == outs[0].rstrip("\n")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "inertialk", "ring", "--n", "2"], capture_output=True, text=True)
    assert p.returncode == 0
    assert "y1^0 * y1^0" in p.stdout
