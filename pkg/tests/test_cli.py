import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from stirzeta.cli import CSV_HEADER, main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["snp", "--n", "1", "--p", "2"], "-3/4"),
        (["snp", "--n", "0", "--p", "7"], "1"),
        (["snp", "--n", "1", "--p", "2", "--method", "recurrence"], "-3/4"),
        (["snp", "--n", "1", "--p", "2", "--method", "butzer"], "-3/4"),
        (["stirling1", "--n", "3", "--k", "2"], "-3"),
        (["stirling1", "--n", "5", "--k", "5"], "1"),
        (["stirling1", "--n", "4", "--k", "0"], "0"),
        (["oracle", "--p", "2", "--digits", "20"], "1.64493406684822643647\nradius <= 1e-30"),
        (["oracle", "--p", "3", "--digits", "20"], "1.20205690315959428540\nradius <= 1e-30"),
        (["zeta", "--p", "2", "--N", "2"], "14049550433/9001692000"),
    ],
)
def test_goldens(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_snp_methods_agree(capsys):
    outs = {run(capsys, "snp", "--n", "17", "--p", "5", "--method", m)[1] for m in ("explicit", "recurrence", "butzer")}
    assert len(outs) == 1


def test_zeta_decimal(capsys):
    code, out, _ = run(capsys, "zeta", "--p", "2", "--N", "10", "--format", "dec", "--digits", "6")
    assert code == 0
    assert len(out.strip().split(".")[1]) == 6
    assert abs(float(out) - 1.644934) <= 1e-2


def test_zeta_json_record(capsys):
    code, out, _ = run(capsys, "zeta", "--p", "3", "--N", "3", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert list(rec) == ["command", "params", "numerator", "denominator", "decimal"]
    assert isinstance(rec["numerator"], str)
    assert Fraction(int(rec["numerator"]), int(rec["denominator"])) == Fraction(
        8399904789734654234407, 7402335466298572800000
    )


def test_limit_override_warns(capsys):
    code, out, err = run(capsys, "zeta", "--p", "2", "--N", "4", "--limit-override", "5", "1")
    assert code == 0
    assert "warning" in err
    assert out.strip() != run(capsys, "zeta", "--p", "2", "--N", "4")[1].strip()


@pytest.mark.parametrize(
    "argv",
    [
        ["zeta", "--p", "2", "--N", "1"],
        ["oracle", "--p", "1", "--digits", "5"],
        ["oracle", "--p", "2", "--digits", "0"],
        ["stirling1", "--n", "3", "--k", "4"],
        ["snp", "--n", "-1", "--p", "2"],
        ["snp", "--n", "1", "--p", "2", "--method", "magic"],
        ["sweep", "--p", "3", "--n-min", "10", "--n-max", "6", "--out", "x.csv"],
        ["sweep", "--p", "3", "--n-min", "2", "--n-max", "6", "--out", "x.csv"],
    ],
)
def test_argument_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_sweep_csv(capsys, tmp_path):
    path = tmp_path / "errs.csv"
    code, out, _ = run(capsys, "sweep", "--p", "3", "--n-min", "6", "--n-max", "22", "--step", "4", "--out", str(path))
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == CSV_HEADER
    body = rows[1:]
    assert [int(r[1]) for r in body] == [6, 10, 14, 18, 22]
    errs = [Fraction(r[3]) for r in body]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert not any("e" in cell.lower() for r in body for cell in r[2:])
    slope = float(out.split("slope_ln_abs_err_vs_N=")[1])
    assert slope <= -0.9


def test_sweep_json(capsys, tmp_path):
    path = tmp_path / "errs.json"
    code, _, _ = run(capsys, "sweep", "--p", "2", "--n-min", "6", "--n-max", "10", "--out", str(path), "--format", "json")
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data) == 2
    keys = ["p", "N", "numerator", "denominator", "decimal", "oracle_mid", "oracle_radius", "abs_err"]
    for rec in data:
        assert list(rec) == keys
        assert all(isinstance(rec[k], str) for k in keys[2:])


def test_sweep_unwritable(capsys, tmp_path):
    bad = tmp_path / "missing" / "dir" / "out.csv"
    code, _, err = run(capsys, "sweep", "--p", "2", "--n-min", "6", "--n-max", "6", "--out", str(bad))
    assert code == 3
    assert "cannot write" in err


def test_verify_stirling(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stirling")
    assert code == 0
    assert "FAIL" not in out


def test_verify_reports_failure(capsys, monkeypatch):
    from stirzeta import verify

    monkeypatch.setattr(
        verify, "run_suite", lambda suite: [verify.CheckResult("zeta", "broken identity", False, "forced")]
    )
    code, out, _ = run(capsys, "verify", "--suite", "zeta")
    assert code == 1
    assert "FAIL" in out and "broken identity" in out


def test_byte_identical_subprocess(tmp_path):
    argv = [sys.executable, "-m", "stirzeta", "zeta", "--p", "3", "--N", "7", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a

    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        subprocess.run(
            [sys.executable, "-m", "stirzeta", "sweep", "--p", "2", "--n-min", "6", "--n-max", "14", "--out", str(path)],
            capture_output=True,
            check=True,
        )
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
