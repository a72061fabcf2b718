"""Command-line behavior: exit codes, output formats, round trips."""

import json
import subprocess
import sys

from qschur.cli import main
from qschur.qseries import MarkerSeries


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "qschur", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


class TestExitCodes:
    def test_verify_success_is_zero(self):
        code, out, _ = run_cli("verify", "eq53", "--L", "0..4")
        assert code == 0
        assert "all hold" in out

    def test_unknown_identity_is_usage_error(self):
        code, _, err = run_cli("verify", "bogus")
        assert code == 2
        assert "unknown identity" in err

    def test_missing_range_is_usage_error(self):
        code, _, err = run_cli("verify", "eq21", "--L", "0..1")
        assert code == 2

    def test_bad_range_is_usage_error(self):
        code, _, err = run_cli("verify", "eq53", "--L", "5..1")
        assert code == 2

    def test_perturbed_identity_fails_with_witness(self):
        code, out, _ = run_cli("verify", "eq21", "--L", "0..1", "--M", "0..1",
                               "--i", "0..1", "--j", "0..1", "--perturb")
        assert code == 1
        assert "first differing coefficient at q^0" in out

    def test_count_negative_n_is_usage_error(self):
        code, _, err = run_cli("count", "S", "--n", "-1")
        assert code == 2

    def test_unknown_theorem_is_usage_error(self):
        code, _, _ = run_cli("count", "T9", "--n", "0..3")
        assert code == 2

    def test_inverse_of_non_gap_input_is_a_counterexample(self):
        code, _, err = run_cli("bijection", "inverse", "a2+b1")
        assert code == 1
        assert "gap condition" in err

    def test_bijection_parse_failure_is_usage_error(self):
        code, _, _ = run_cli("bijection", "inverse", "zz9")
        assert code == 2
        code, _, _ = run_cli("bijection", "forward", "a1+b2")  # missing '/'
        assert code == 2

    def test_csv_rejected_outside_count(self):
        assert run_cli("gf", "GL", "--L", "1", "--format", "csv")[0] == 2
        assert run_cli("verify", "eq53", "--L", "0..2", "--format", "csv")[0] == 2


class TestVerifyCommand:
    def test_negative_ranges_on_the_documented_grid(self):
        code, out, _ = run_cli("verify", "eq21", "--L", "-3..6", "--M", "-3..6",
                               "--i", "-3..6", "--j", "-3..6", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["cells"] == 10 ** 4
        assert payload["summary"]["holds"] is True

    def test_json_summary(self):
        code, out, _ = run_cli("verify", "eq32", "--L", "0..5", "--i", "0..3",
                               "--j", "0..3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["holds"] is True
        assert payload["summary"]["skipped"] > 0
        assert payload["failures"] == []

    def test_caps_are_accepted(self):
        code, out, _ = run_cli("verify", "eq26", "--i", "0..2", "--j", "0..2",
                               "--qmax", "20")
        assert code == 0

    def test_threads_env_is_deterministic(self):
        import os
        env = dict(os.environ, QSCHUR_THREADS="2")
        proc = subprocess.run(
            [sys.executable, "-m", "qschur", "verify", "eq21",
             "--L", "0..2", "--M", "0..2", "--i", "0..2", "--j", "0..2",
             "--perturb", "--format", "json"],
            capture_output=True, text=True, env=env)
        assert proc.returncode == 1
        payload = json.loads(proc.stdout)
        params = [f["params"] for f in payload["failures"]]
        assert params == sorted(params, key=lambda p: (p["L"], p["M"], p["i"], p["j"]))


class TestCountCommand:
    def test_schur_rows(self):
        code, out, _ = run_cli("count", "S", "--n", "0..40")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 42  # 41 rows plus the summary line
        assert lines[-1] == "41 checks, 0 failed"

    def test_t2_sweep(self):
        code, out, _ = run_cli("count", "T2", "--n", "0..8", "--L", "2..3",
                               "--M", "2..4")
        assert code == 0

    def test_csv_format(self):
        code, out, _ = run_cli("count", "S", "--n", "0..3", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "theorem,n,lhs,rhs,holds"

    def test_explicit_ij_ranges(self):
        code, out, _ = run_cli("count", "T2", "--n", "0..5", "--L", "3", "--M", "4",
                               "--i", "1", "--j", "0..1")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(" i=1 " in line for line in lines[:-1])

    def test_count_out_file(self, tmp_path):
        target = tmp_path / "schur.csv"
        code, _, _ = run_cli("count", "S", "--n", "0..5", "--format", "csv",
                             "--out", str(target))
        assert code == 0
        assert target.read_text().splitlines()[0] == "theorem,n,lhs,rhs,holds"


class TestBijectionCommand:
    def test_forward_matches_the_worked_table(self):
        code, out, _ = run_cli("bijection", "forward",
                               "a6+a5+a3+a2+a1 / b9+b8+b6+b4+b2+b1")
        assert code == 0
        assert "pi3 = ab12+ab10+b7+b6+a5+ab4+b2+a1" in out
        # spot-check the four columns of the first data row
        first = out.splitlines()[1].split()
        assert first[0] == "b9"
        assert first[1:4] == ["b2", "|", "7"]
        assert first[4:7] == ["ab5", "|", "7"]
        assert first[7] == "ab12"

    def test_forward_empty(self):
        code, out, _ = run_cli("bijection", "forward", "∅ / ∅")
        assert code == 0
        assert "pi3 = ∅" in out

    def test_inverse_recovers_the_pair(self):
        code, out, _ = run_cli("bijection", "inverse",
                               "ab12+ab10+b7+b6+a5+ab4+b2+a1")
        assert code == 0
        assert "pi1 = a6+a5+a3+a2+a1" in out
        assert "pi2 = b9+b8+b6+b4+b2+b1" in out

    def test_forward_json_trace(self):
        code, out, _ = run_cli("bijection", "forward", "a1 / b2",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["pi3"] == [{"color": "b", "weight": 2},
                                  {"color": "a", "weight": 1}]
        assert payload["c2"] == [1, 0]


class TestGfCommand:
    def test_GL_examples(self):
        assert run_cli("gf", "GL", "--L", "1")[1].strip() == "1 + A*q + B*q"
        assert run_cli("gf", "GL", "--L", "0")[1].strip() == "1"

    def test_trinomial_rhs_example(self):
        assert run_cli("gf", "trinomialRHS", "--L", "1")[1].strip() == \
            "1 + A*q + B*q^2"

    def test_PL_equals_GL_dump(self):
        assert run_cli("gf", "PL", "--L", "3")[1] == run_cli("gf", "GL", "--L", "3")[1]

    def test_json_round_trip_bytes(self):
        code, out, _ = run_cli("gf", "GL", "--L", "2", "--format", "json")
        assert code == 0
        series = MarkerSeries.from_json_text(out)
        assert series.to_json_text() == out.rstrip("\n")

    def test_usage_errors(self):
        assert run_cli("gf", "GL")[0] == 2
        assert run_cli("gf", "nope", "--L", "2")[0] == 2
        assert run_cli("gf", "trinomialRHS", "--L", "0")[0] == 2

    def test_out_file(self, tmp_path):
        target = tmp_path / "g2.json"
        code, out, _ = run_cli("gf", "GL", "--L", "2", "--format", "json",
                               "--out", str(target))
        assert code == 0
        parsed = MarkerSeries.from_json_text(target.read_text())
        assert parsed.coeff((2, 0)).coeff(3) == 1


class TestInProcessMain:
    def test_main_returns_exit_codes(self, capsys):
        assert main(["verify", "eq53", "--L", "0..3"]) == 0
        assert main(["verify", "nope"]) == 2
        capsys.readouterr()
