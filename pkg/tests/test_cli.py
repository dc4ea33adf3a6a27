import json
import subprocess
import sys

import pytest

from powerfree.cli import EXIT_ERROR, EXIT_FOUND, EXIT_OK, main, parse_command



def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_command():
    cmd = parse_command(["gen-word", "--family", "wi", "--k", "3", "--base", "01x3", "--i", "2"])
    assert cmd.command == "gen-word" and cmd.i == 2 and cmd.base == "01x3"
    cmd = parse_command(["check", "--kind", "overlap", "0110"])
    assert cmd.command == "check" and cmd.word == "0110"


def test_bogus_flag(capsys):
    code, _, err = run(capsys, "--bogus")
    assert code == EXIT_ERROR and "usage" in err
    code, _, _ = run(capsys, "check", "--kind", "nope", "0")
    assert code == EXIT_ERROR


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--kind", "kpower", "--k", "3", "010101")
    assert code == EXIT_FOUND and "start 0 period 2" in out
    code, out, _ = run(capsys, "check", "--kind", "overlap", "0110")
    assert code == EXIT_OK and out == "overlap-free\n"
    assert run(capsys, "check", "--kind", "primitive", "0101")[0] == EXIT_FOUND
    assert run(capsys, "check", "--kind", "simple-power", "--k", "3", "01x3")[0] == EXIT_OK
    assert run(capsys, "check", "--kind", "circ-squarefree", "012")[0] == EXIT_OK
    assert run(capsys, "check", "--kind", "overlap", "0a1")[0] == EXIT_ERROR


def test_gen_word(capsys):
    code, out, _ = run(capsys, "gen-word", "--family", "wi", "--i", "2", "--cyc0")
    assert code == EXIT_OK and len(out.strip()) == 35
    assert run(capsys, "gen-word", "--family", "thue-morse", "--len", "8")[1] == "01101001\n"
    code, out, _ = run(capsys, "gen-word", "--family", "circ-squarefree", "--len", "5")
    assert code == EXIT_FOUND and out.startswith("none")
    code, out, _ = run(capsys, "gen-word", "--family", "simple-overlap", "--word", "00")
    assert code == EXIT_OK
    assert run(capsys, "gen-word", "--family", "wi", "--base", "0110", "--k", "2")[0] == EXIT_ERROR


def test_gen_dfa_file(tmp_path, capsys):
    path = tmp_path / "d2.json"
    code, out, _ = run(capsys, "gen-dfa", "--k", "3", "--base", "01x3", "--i", "2", "--out", str(path))
    assert code == EXIT_OK and "12-state" in out
    assert json.loads(path.read_text())["states"] == 12
    code, out, _ = run(capsys, "search-shortest", "--dfa", str(path), "--k", "3", "--max-len", "40")
    assert code == EXIT_OK
    code2, expected, _ = run(capsys, "gen-word", "--family", "wi", "--i", "2", "--cyc0")
    assert out == expected


def test_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "search-shortest", "--dfa", str(tmp_path / "missing.json"), "--max-len", "3")
    assert code == EXIT_ERROR and err.startswith("error:")
    assert run(capsys, "gen-dfa", "--i", "1", "--out", str(tmp_path / "no" / "x.json"))[0] == EXIT_ERROR


def test_search_none(capsys):
    code, out, _ = run(capsys, "search-shortest", "--i", "2", "--max-len", "20")
    assert code == EXIT_FOUND and out.startswith("none")


def test_carpi(tmp_path, capsys):
    assert run(capsys, "carpi", "phi", "7,7")[1] == "001101\n"
    assert run(capsys, "carpi", "phi-split", "7,7")[1] == "001 101\n"
    code, out, _ = run(capsys, "carpi", "invert", "01", "--max-len", "2")
    assert code == EXIT_OK and out.split() == ["7", "0,1", "0,5", "7,0"]
    path = tmp_path / "psi.json"
    run(capsys, "gen-dfa", "--i", "1", "--out", str(tmp_path / "d1.json"))
    code, out, _ = run(capsys, "carpi", "build-psi", "--dfa", str(tmp_path / "d1.json"), "--out", str(path))
    assert code == EXIT_OK and json.loads(path.read_text())["alphabet"] == 25
    code, out, _ = run(capsys, "carpi", "via-psi", "--dfa", str(tmp_path / "d1.json"), "--max-len", "3")
    # the only accepted word, 01010, is itself an overlap
    assert code == EXIT_FOUND and out.startswith("none")


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "--i", "1")
    assert code == EXIT_OK and out.startswith("digraph {")
    assert "q_d" in run(capsys, "export-dot", "--i", "1", "--show-dead")[1]
    assert run(capsys, "export-dot")[0] == EXIT_ERROR


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--max-len", "10")
    assert code == EXIT_OK
    lines = [line for line in out.splitlines() if not line.startswith("#")]
    assert lines and all("counterexamples=0" in line for line in lines)


@pytest.mark.parametrize("argv", [
    ["gen-dfa", "--i", "3"],
    ["export-dot", "--i", "2"],
    ["gen-word", "--family", "wi-prime", "--i", "2"],
    ["carpi", "invert", "0110", "--max-len", "4"],
])
def test_byte_deterministic(argv):
    cmd = [sys.executable, "-m", "powerfree", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_stdin_pipeline():
    gen = subprocess.run([sys.executable, "-m", "powerfree", "gen-dfa", "--i", "2"],
                         capture_output=True, check=True, text=True)
    found = subprocess.run([sys.executable, "-m", "powerfree", "search-shortest", "--dfa", "-",
                            "--max-len", "40"], input=gen.stdout, capture_output=True, text=True)
    assert found.returncode == 0 and len(found.stdout.strip()) == 35
