import json
import subprocess
import sys

import pytest

from iterseq.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_kaprekar_step(capsys):
    code, out, _ = run(capsys, "kaprekar", "step", "--base", "10", "--length", "4", "-u", "1", "-v", "1",
                       "--value", "1234")
    assert (code, out) == (0, "3087\n")
    code, out, _ = run(capsys, "kaprekar", "step", "--base", "2", "--length", "5", "-u", "2", "-v", "2",
                       "--value", "0b00110")
    assert (code, out) == (0, "15\n")
    code, out, _ = run(capsys, "kaprekar", "step", "--base", "10", "--length", "3", "-u", "2", "-v", "2",
                       "--value", "777")
    assert (code, out) == (0, "degenerate\n")


def test_kaprekar_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "kaprekar", "classify", "--base", "10", "--length", "4")
    assert code == 0
    assert json.loads(out)["fixed_points"] == [6174]
    code, out, err = run(capsys, "kaprekar", "classify", "--base", "10", "--length", "4", "-u", "1", "-v", "2")
    assert code == 1
    assert json.loads(out)["published"]["unexpected"] == [[4977]]
    assert "4997" in err


def test_kaprekar_table1_and_conjecture(capsys):
    code, out, _ = run(capsys, "kaprekar", "table1")
    assert code == 0 and "110010101" in out
    code, out, err = run(capsys, "kaprekar", "conjecture", "--m-min", "3", "--m-max", "4")
    assert code == 0
    assert [r["m"] for r in json.loads(out)] == [3, 4]
    assert "holds" in err


def test_cap_needs_acknowledgement(capsys):
    args = ["kaprekar", "classify", "--base", "10", "--length", "4", "--cap", str(10**8)]
    code, _, err = run(capsys, *args)
    assert code == 2 and "--allow-large" in err
    code, _, _ = run(capsys, *args, "--allow-large")
    assert code == 0
    code, _, _ = run(capsys, "kaprekar", "classify", "--base", "10", "--length", "4", "--cap", "100")
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "collatz", "--start", "0")[0] == 2
    assert run(capsys, "collatz", "verify")[0] == 2
    assert run(capsys, "kaprekar", "step", "--base", "10", "--length", "4", "--value", "99999")[0] == 2
    assert run(capsys, "dfp", "--start", "12x")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "kaprekar", "conjecture", "--m-min", "5", "--m-max", "4")[0] == 2


def test_collatz(capsys):
    code, out, _ = run(capsys, "collatz", "--start", "36", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "step,value" and len(lines) == 23
    code, out, _ = run(capsys, "collatz", "--start", "27", "--max-steps", "5")
    assert code == 3
    code, out, err = run(capsys, "collatz", "verify", "--upto", "1000")
    assert code == 0
    assert json.loads(out)["max_steps"] == 178
    assert err.startswith("collatz:")


def test_digit_processes(capsys):
    code, out, _ = run(capsys, "dfp", "--start", "871")
    data = json.loads(out)
    assert code == 0 and data["terminal"] == "loop2A" and data["transient_length"] == 0
    code, out, _ = run(capsys, "dfp", "--start", "123")
    data = json.loads(out)
    assert data["first_image"] == 9 and data["terminal"] is not None
    code, out, _ = run(capsys, "dpp", "--start", "3435", "--trace")
    assert out == "step,value\n0,3435\n"
    code, out, _ = run(capsys, "dfp", "--start", "45361", "--trace")
    assert out == "step,value\n0,45361\n1,871\n"
    code, out, _ = run(capsys, "dpp", "--start", "9" * 60)
    assert code == 0 and json.loads(out)["terminal"] is not None


def test_verify_output_file(tmp_path, capsys):
    target = tmp_path / "dfp.json"
    code, out, err = run(capsys, "-o", str(target), "verify", "dfp")
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["cases"] == 11439
    assert "confirmed" in err
    assert list(tmp_path.iterdir()) == [target]


def test_workers_byte_identical(capsys, monkeypatch):
    _, one, _ = run(capsys, "verify", "dfp", "--workers", "1")
    _, four, _ = run(capsys, "verify", "dfp", "--workers", "4")
    monkeypatch.setenv("ITERSEQ_WORKERS", "2")
    _, env, _ = run(capsys, "verify", "dfp")
    assert one == four == env


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "iterseq", "kaprekar", "step", "--base", "10",
                          "--length", "3", "-u", "2", "-v", "2", "--value", "450"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == "450\n"
    assert res.stderr == ""


@pytest.mark.parametrize("fmt", ["json", "table"])
def test_verify_formats(capsys, fmt):
    code, out, _ = run(capsys, "verify", "dfp", "--depth", "2", "--format", fmt)
    assert code == 0 and out
