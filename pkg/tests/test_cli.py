"""End-to-end tests for the weightdirac command line"""

import json

import pytest

from weightdirac.core.errors import EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_PRECONDITION
from weightdirac.core.executor import JobResult
from weightdirac.main import main
from weightdirac.schemas.records import CheckRecord


def run_job(golden_dir, tmp_path, command, job, *extra):
    out = tmp_path / f"{command}.out"
    code = main([command, "--config", str(golden_dir / job), "--out", str(out), *extra])
    return code, out.read_text() if out.exists() else None


def last_error(capsys):
    lines = [line for line in capsys.readouterr().err.splitlines() if line.strip()]
    return json.loads(lines[-1])


class TestCommands:
    """Tests for each command on golden job files"""

    def test_dirac(self, golden_dir, tmp_path):
        """Test H_D(L(0)) on the window [-3], [-1], [1]"""
        code, text = run_job(golden_dir, tmp_path, "dirac", "a1_trivial_dirac.job")
        assert code == EXIT_OK
        assert [json.loads(line) for line in text.splitlines()] == [
            {"weight": ["-3"], "dim_plus": 0, "dim_minus": 0},
            {"weight": ["-1"], "dim_plus": 1, "dim_minus": 0},
            {"weight": ["1"], "dim_plus": 0, "dim_minus": 1},
        ]

    def test_dirac_csv(self, golden_dir, tmp_path):
        """Test the csv rendering of the same job"""
        code, text = run_job(golden_dir, tmp_path, "dirac", "a1_trivial_dirac.job", "--format", "csv")
        assert code == EXIT_OK
        assert text == "w1,dim_plus,dim_minus\n-3,0,0\n-1,1,0\n1,0,1\n"

    def test_describe(self, golden_dir, tmp_path):
        """Test that the cuspidal module has one-dimensional blocks on its support"""
        code, text = run_job(golden_dir, tmp_path, "describe", "a1_cuspidal.job")
        assert code == EXIT_OK
        records = [json.loads(line) for line in text.splitlines()]
        assert [r["weight"] for r in records] == [["-4"], ["-2"], ["0"], ["2"], ["4"]]
        assert {r["dim"] for r in records} == {1}

    def test_cohomology(self, golden_dir, tmp_path):
        """Test that u-cohomology of a cuspidal module vanishes on the window"""
        code, text = run_job(golden_dir, tmp_path, "cohomology", "a1_cuspidal.job")
        assert code == EXIT_OK
        for line in text.splitlines():
            record = json.loads(line)
            assert record["direction"] == "u-cohomology"
            assert record["dims"] == [0, 0]

    def test_index_of_cuspidal_is_empty(self, golden_dir, tmp_path):
        """Test that only nonzero index values are emitted"""
        code, text = run_job(golden_dir, tmp_path, "index", "a1_cuspidal.job")
        assert code == EXIT_OK
        assert text == ""

    def test_verify_pair(self, golden_dir, tmp_path):
        """Test EP(M(0), L(0)) = [I(M(0)), I(L(0))] = 1"""
        code, text = run_job(golden_dir, tmp_path, "verify", "a1_verify_verma_trivial.job")
        assert code == EXIT_OK
        assert json.loads(text) == {
            "first": "M",
            "second": "L",
            "ep": 1,
            "index_pair": 1,
            "equal": True,
            "method": "induced-collapse",
        }

    @pytest.mark.slow
    def test_parabolic_index(self, golden_dir, tmp_path):
        """Test that a module induced from a cuspidal Levi module has zero index"""
        code, text = run_job(golden_dir, tmp_path, "index", "a2_parabolic_index.job")
        assert code == EXIT_OK
        assert text == ""

    def test_parallel_output_is_identical(self, golden_dir, tmp_path):
        """Test that the worker count does not change the emitted bytes"""
        _, serial = run_job(golden_dir, tmp_path, "describe", "a1_cuspidal.job", "--parallel", "1")
        _, parallel = run_job(golden_dir, tmp_path, "describe", "a1_cuspidal.job", "--parallel", "3")
        assert serial == parallel

    def test_stdout_when_no_out(self, golden_dir, capsys):
        """Test that results go to stdout without --out"""
        code = main(["dirac", "--config", str(golden_dir / "a1_trivial_dirac.job")])
        assert code == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 3


class TestExitCodes:
    """Tests for failure exit codes and the error line on stderr"""

    def test_missing_config_file(self, tmp_path, capsys):
        """Test that an unreadable config exits with 1"""
        code = main(["describe", "--config", str(tmp_path / "missing.job")])
        assert code == EXIT_CONFIG
        assert last_error(capsys)["error_code"] == "CONFIG_ERROR"

    def test_malformed_config(self, tmp_path, capsys):
        """Test that a syntax error exits with 1 and reports its line"""
        job = tmp_path / "bad.job"
        job.write_text("[algebra]\ntype = A1\n[bogus]\n")
        assert main(["describe", "--config", str(job)]) == EXIT_CONFIG
        error = last_error(capsys)
        assert error["metadata"]["line"] == "3"

    def test_declared_command_must_match(self, golden_dir, capsys):
        """Test that [command] name must agree with the command line"""
        code = main(["dirac", "--config", str(golden_dir / "a1_verify_verma_trivial.job")])
        assert code == EXIT_CONFIG

    def test_precondition_violation(self, golden_dir, tmp_path, capsys):
        """Test that integral cuspidal parameters exit with 2"""
        code, _ = run_job(golden_dir, tmp_path, "describe", "a1_not_cuspidal.job")
        assert code == EXIT_PRECONDITION
        error = last_error(capsys)
        assert error["error_code"] == "NOT_CUSPIDAL"
        assert error["exit_code"] == EXIT_PRECONDITION

    def test_verification_mismatch(self, golden_dir, tmp_path, mocker, capsys):
        """Test that a failed check still writes records and exits with 3"""
        failed = JobResult(
            "verify", CheckRecord, [CheckRecord(check="squares", status="failed", detail="C^2 != 0")], passed=False
        )
        mocker.patch("weightdirac.main.execute", return_value=failed)
        code, text = run_job(golden_dir, tmp_path, "verify", "a1_verify_verma_trivial.job")
        assert code == EXIT_MISMATCH
        assert json.loads(text)["status"] == "failed"
        assert last_error(capsys)["error_code"] == "VERIFICATION_MISMATCH"

    def test_unknown_command(self, golden_dir, capsys):
        """Test that an unknown command is a configuration error with exit 1"""
        with pytest.raises(SystemExit) as exc_info:
            main(["explode", "--config", str(golden_dir / "a1_cuspidal.job")])
        assert exc_info.value.code == EXIT_CONFIG
        assert last_error(capsys)["error_code"] == "CONFIG_ERROR"

    def test_parallel_must_be_positive(self, golden_dir, capsys):
        """Test that --parallel 0 is a usage error reported as a configuration error"""
        with pytest.raises(SystemExit) as exc_info:
            main(["describe", "--config", str(golden_dir / "a1_cuspidal.job"), "--parallel", "0"])
        assert exc_info.value.code == EXIT_CONFIG
        assert "--parallel" in last_error(capsys)["detail"]

    def test_unwritable_output(self, golden_dir, tmp_path, capsys):
        """Test that a failed write to --out exits with 1 and an error line"""
        out = tmp_path / "missing" / "result.jsonl"
        code = main(["describe", "--config", str(golden_dir / "a1_cuspidal.job"), "--out", str(out)])
        assert code == EXIT_CONFIG
        error = last_error(capsys)
        assert error["error_code"] == "CONFIG_ERROR"
        assert "cannot write output" in error["detail"]
        assert not out.exists()

    def test_version(self, capsys):
        """Test that --version prints the program version and exits with 0"""
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert "weightdirac 0.1.0" in capsys.readouterr().out
