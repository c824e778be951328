import os
import subprocess
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = [
    ("example35.verify.txt", ["verify", "example35.code"]),
    ("example35.verify.lines.txt", ["verify", "--format", "lines", "example35.code"]),
    ("example35.reduce.txt", ["reduce", "example35.code"]),
    ("tiny.dual.txt", ["dual", "--method", "both", "tiny.code"]),
    ("tiny.weights.txt", ["weights", "tiny.code"]),
    ("tiny.enumerate.txt", ["enumerate", "tiny.code"]),
    ("tiny.verify.txt", ["verify", "tiny.code"]),
    ("cyclic22.cyclic-check.txt", ["cyclic-check", "cyclic22.code"]),
    ("cyclic22.verify.txt", ["verify", "cyclic22.code"]),
]


def run_cli(args, hashseed="0"):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run(
        [sys.executable, "-m", "zpzpu.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=str(FIXTURES),
    )


@pytest.mark.parametrize("golden_name,args", CASES)
def test_golden_output(golden_name, args):
    want = (GOLDEN / golden_name).read_text()
    got = run_cli(args)
    assert got.returncode == 0, got.stderr
    assert got.stdout == want


@pytest.mark.parametrize("golden_name,args", CASES)
def test_determinism_across_hash_seeds(golden_name, args):
    first = run_cli(args, hashseed="0")
    second = run_cli(args, hashseed="4242")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode


def test_parse_error_exits_2(tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("p = 4\nalpha = 1\nbeta = 1\nrows:\n1 | 0\n")
    result = run_cli(["verify", str(bad)])
    assert result.returncode == 2
    assert "not prime" in result.stderr


def test_missing_file_exits_2():
    result = run_cli(["verify", "no-such-file.code"])
    assert result.returncode == 2


def test_usage_error_exits_2():
    result = run_cli(["no-such-verb"])
    assert result.returncode == 2


def test_non_cyclic_check_exits_1(tmp_path):
    spec = tmp_path / "noncyclic.code"
    spec.write_text("p = 3\nalpha = 2\nbeta = 1\nrows:\n1 0 | 0\n")
    result = run_cli(["cyclic-check", str(spec)])
    assert result.returncode == 1
    assert "cyclic: FAIL" in result.stdout


def test_budget_flag_reports_skip(tmp_path):
    result = run_cli(["--budget", "5", "enumerate", "example35.code"])
    assert result.returncode == 0
    assert "SKIPPED(budget)" in result.stdout
