"""Command-line contract: outputs, exit codes, report round-trips."""

import csv
import json

from ghkernel.cli import canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_polynomial(capsys):
    code, out, _ = run(capsys, "eval", "--m", "2", "--x", "1", "--p", "1")
    assert code == 0
    assert out.strip() == "3"


def test_eval_hermite(capsys):
    code, out, _ = run(capsys, "eval", "--hermite", "--n", "3", "--x", "1")
    assert code == 0
    assert out.strip() == "-4"


def test_eval_degree_zero(capsys):
    code, out, _ = run(capsys, "eval", "--m", "0", "--x", "9", "--p", "9")
    assert code == 0
    assert out.strip() == "1"


def test_eval_rational_and_complex_arguments(capsys):
    # argparse needs the --flag=value form for negative arguments
    code, out, _ = run(capsys, "eval", "--m", "2", "--x", "1/2", "--p=-1/4")
    assert code == 0
    assert out.strip() == "-1/4"
    code, out, _ = run(capsys, "eval", "--m", "2", "--x", "0+1i", "--p", "0")
    assert code == 0
    assert out.strip() == "-1"


def test_eval_float_mode(capsys):
    code, out, _ = run(capsys, "eval", "--m", "2", "--x", "0.5", "--p", "0.25",
                       "--mode", "float")
    assert code == 0
    assert out.strip() == "0.75"


def test_eval_malformed_numeral_exits_2(capsys):
    code, _, err = run(capsys, "eval", "--m", "2", "--x", "bogus", "--p", "1")
    assert code == 2
    assert "error" in err


def test_eval_missing_arguments_exit_2(capsys):
    code, _, _ = run(capsys, "eval", "--m", "2", "--x", "1")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--hermite", "--x", "1")
    assert code == 2


def test_unknown_identity_exits_2(capsys):
    code = main(["verify", "still-not-an-identity"])
    capsys.readouterr()
    assert code == 2


def test_verify_graczyk_explicit_point_inexact_norms_exit_2(capsys):
    code, _, err = run(capsys, "verify", "graczyk", "--mode", "exact",
                       "--xv", "1,1", "--yv", "1,2")
    assert code == 2
    assert "not a perfect rational square" in err


def test_verify_graczyk_explicit_point_passes(tmp_path, capsys):
    out_file = tmp_path / "point.json"
    code, _, _ = run(capsys, "verify", "graczyk", "--xv", "3,4", "--yv", "3,4",
                     "--p", "1", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["all_pass"] is True
    worked = [r for r in payload["reports"] if r["params"]["M"] == "2"]
    assert worked and worked[0]["lhs"] == "733/2"
    assert worked[0]["verdict"] == "exact-pass"


def test_verify_matrix_sweep_and_json_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "matrix.json"
    code, _, err = run(capsys, "verify", "matrix", "--out", str(out_file))
    assert code == 0
    assert "all pass" in err
    text = out_file.read_text()
    payload = json.loads(text)
    assert canonical_json(payload) == text
    for row in payload["reports"]:
        assert set(row) == {
            "identity", "mode", "params", "lhs", "rhs", "residual",
            "verdict", "spec_version",
        }


def test_verify_float_mode_with_tolerance(tmp_path, capsys):
    out_file = tmp_path / "float.json"
    code, _, _ = run(capsys, "verify", "matrix", "--mode", "float",
                     "--tolerance", "1e-9", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert all(r["verdict"] == "within-tolerance" for r in payload["reports"])


def test_verify_impossible_tolerance_exits_1(tmp_path, capsys):
    out_file = tmp_path / "fail.json"
    code, _, err = run(capsys, "verify", "matrix", "--mode", "float",
                       "--tolerance", "1e-30", "--out", str(out_file))
    assert code == 1
    assert "FAILURES" in err
    payload = json.loads(out_file.read_text())
    assert payload["all_pass"] is False


def test_verify_rejects_nonpositive_tolerance(capsys):
    code, _, _ = run(capsys, "verify", "matrix", "--mode", "float",
                     "--tolerance", "0")
    assert code == 2


def test_verify_csv_columns(tmp_path, capsys):
    out_file = tmp_path / "report.csv"
    code, _, _ = run(capsys, "verify", "matrix", "--format", "csv",
                     "--out", str(out_file))
    assert code == 0
    with open(out_file, newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert rows
    assert set(rows[0]) == {
        "identity", "mode", "params", "lhs", "rhs", "residual",
        "verdict", "spec_version",
    }
    assert all(json.loads(row["params"]) for row in rows)


def test_verify_thread_env_does_not_change_reports(tmp_path, capsys, monkeypatch):
    serial = tmp_path / "serial.json"
    threaded = tmp_path / "threaded.json"
    code, _, _ = run(capsys, "verify", "matrix", "--out", str(serial))
    assert code == 0
    monkeypatch.setenv("GH_KERNEL_THREADS", "4")
    code, _, _ = run(capsys, "verify", "matrix", "--out", str(threaded))
    assert code == 0
    assert serial.read_bytes() == threaded.read_bytes()


def test_verify_bad_thread_env_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("GH_KERNEL_THREADS", "many")
    code, _, _ = run(capsys, "verify", "matrix")
    assert code == 2


def test_sample_inner_product_deterministic(tmp_path, capsys):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    argv = ["sample", "inner-product", "--xv", "3,4", "--yv", "3,4", "--p", "1",
            "--count", "50000", "--seed", "7"]
    code, _, _ = run(capsys, *argv, "--out", str(first))
    assert code == 0
    code, _, _ = run(capsys, *argv, "--out", str(second))
    assert code == 0
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text())
    assert payload["all_pass"] is True
    assert canonical_json(payload) == first.read_text()


def test_sample_negative_p_exits_2(capsys):
    code, _, err = run(capsys, "sample", "inner-product", "--p=-1")
    assert code == 2
    assert "p >= 0" in err


def test_sample_chi_merge(tmp_path, capsys):
    out_file = tmp_path / "chi.json"
    code, _, _ = run(capsys, "sample", "chi-merge", "--a", "3", "--b", "4",
                     "--count", "50000", "--seed", "11", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["exact_moments"] == {"2": 7.0, "4": 63.0}
    assert all(v["verdict"] == "pass" for v in payload["exact_verdicts"])


def test_sample_matrix_target(tmp_path, capsys):
    out_file = tmp_path / "matrix.json"
    code, _, _ = run(capsys, "sample", "matrix", "--count", "50000",
                     "--seed", "3", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["params"]["shape"] == "2x2"
    assert payload["all_pass"] is True


def test_sample_tiny_z_exits_1(tmp_path, capsys):
    out_file = tmp_path / "fail.json"
    code, _, _ = run(capsys, "sample", "inner-product", "--count", "50000",
                     "--seed", "5", "--z", "1e-9", "--out", str(out_file))
    assert code == 1


def test_sample_ks_diagnostic(tmp_path, capsys):
    out_file = tmp_path / "ks.json"
    code, _, _ = run(capsys, "sample", "chi-merge", "--count", "20000",
                     "--seed", "2", "--ks", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert 0.0 <= payload["ks"]["statistic"] <= 1.0


def test_sample_csv_output(tmp_path, capsys):
    out_file = tmp_path / "sample.csv"
    code, _, _ = run(capsys, "sample", "chi-merge", "--count", "20000",
                     "--seed", "2", "--format", "csv", "--out", str(out_file))
    assert code == 0
    with open(out_file, newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 4
    assert rows[0]["identity"] == "chi-merge"


def test_sample_rejects_tiny_count(capsys):
    code, _, _ = run(capsys, "sample", "inner-product", "--count", "1")
    assert code == 2


def test_verify_point_overrides_require_graczyk(capsys):
    code, _, _ = run(capsys, "verify", "matrix", "--xv", "3,4", "--yv", "3,4")
    assert code == 2
