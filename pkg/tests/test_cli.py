import json
import subprocess
import sys

import pytest

from elastoweyl import cli
from elastoweyl.cli import main
from elastoweyl.numerics.quadrature import QuadratureError
from elastoweyl.numerics.series import SeriesError
from elastoweyl.spectra.disk import ScanBudgetError


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    head = lines[0].split(",")
    return [dict(zip(head, l.split(","))) for l in lines[1:]]


def notes(text):
    return dict(l[2:].split("=", 1) for l in text.splitlines() if l.startswith("# ") and "=" in l)


def test_coeffs_row(capsys):
    code, out, _ = run(["coeffs", "--dim", "3", "--lambda", "2", "--mu", "1"], capsys)
    assert code == 0
    assert out.startswith("# elastoweyl coeffs v1\n")
    (row,) = table(out)
    assert float(row["b_dir"]) == pytest.approx(-0.0537154, abs=1e-6)
    assert float(row["b_free"]) == pytest.approx(0.0629989, abs=1e-6)
    assert float(row["delta_dir"]) < 1e-9
    # twelve significant digits
    assert row["b_free"] == f"{0.0629988316405419:.12g}"


def test_coeffs_liu_ratio_below_one(capsys):
    code, out, _ = run(["coeffs", "--dim", "3", "--liu"], capsys)
    (row,) = table(out)
    assert code == 0 and 0 < float(row["liu_ratio"]) < 1


def test_coeffs_alpha_sweep_grid(capsys):
    code, out, _ = run(["coeffs", "--alpha-sweep", "0.05:0.95:19", "--dim", "2..5"], capsys)
    rows = table(out)
    assert code == 0 and len(rows) == 4 * 19
    assert {r["dim"] for r in rows} == {"2", "3", "4", "5"}
    assert all(r["b_dir_odd"] == "" for r in rows if r["dim"] in ("2", "4"))


def test_rayleigh_command(capsys):
    code, out, _ = run(["rayleigh", "--alpha", "0.25"], capsys)
    (row,) = table(out)
    assert code == 0
    assert float(row["w1"]) == pytest.approx(0.869604565232721, rel=1e-11)
    assert float(notes(out)["alpha_star"]) == pytest.approx(0.321498397348, rel=1e-11)


def test_shift_free_plateau(capsys):
    code, out, _ = run(["shift", "--bc", "free", "--dim", "3", "--lambda", "2", "--mu", "1",
                        "--grid", "400"], capsys)
    assert code == 0
    rows = table(out)
    n = notes(out)
    assert float(n["breakpoint_rayleigh"]) == pytest.approx(0.869604565233)
    assert float(n["breakpoint_shear"]) == 1.0 and float(n["breakpoint_pressure"]) == 4.0
    plateau = [float(r["shift"]) for r in rows if 0.8697 < float(r["Lambda"]) < 1.0]
    assert plateau and all(v == 1.0 for v in plateau)
    flagged = sorted(float(r["Lambda"]) for r in rows if r["breakpoint"] == "1")
    assert flagged == pytest.approx([0.869604565233, 1.0, 4.0])


@pytest.mark.parametrize("bc", ["dir", "free"])
def test_shift_check_b(capsys, bc):
    code, out, _ = run(["shift", "--bc", bc, "--check-b", "--grid", "10"], capsys)
    n = notes(out)
    assert code == 0
    assert n["b_check_pass"] == "1"
    assert float(n["b_abs_diff"]) < 1e-6


def test_json_output_is_valid(capsys):
    code, out, _ = run(["coeffs", "--dim", "2,3", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "elastoweyl/coeffs/v1"
    assert [r["dim"] for r in doc["rows"]] == [2, 3]
    assert doc["rows"][0]["b_dir_odd"] is None


def test_format_accepted_before_subcommand_arguments(capsys):
    code, out, _ = run(["rayleigh", "--format", "json", "--alpha", "0.5"], capsys)
    assert code == 0 and json.loads(out)["rows"][0]["alpha"] == 0.5


def test_output_is_deterministic(tmp_path, capsys):
    argv = ["count", "--model", "disk", "--bc", "free", "--lambda-max", "150", "--grid", "50"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_count_cache_reuse(tmp_path, capsys):
    cache = tmp_path / "disk.csv"
    argv = ["count", "--model", "disk", "--bc", "dir", "--lambda-max", "200", "--grid", "40",
            "--cache", str(cache)]
    code, first, _ = run(argv, capsys)
    assert code == 0 and cache.exists()
    assert notes(first)["cached"] == "0"
    code, second, _ = run(argv, capsys)
    assert notes(second)["cached"] == "1"
    assert table(first) == table(second)
    # a different material must not reuse the cache
    code, third, _ = run(argv + ["--lambda", "3"], capsys)
    assert notes(third)["cached"] == "0"


def test_count_cylinder_columns(capsys):
    code, out, _ = run(["count", "--model", "cylinder", "--h", "3.14159", "--bc", "free",
                        "--lambda-max", "60", "--grid", "20", "--emit-liu"], capsys)
    rows = table(out)
    assert code == 0 and len(rows) == 20
    assert set(rows[0]) == {"Lambda", "N", "residual", "prediction", "liu_prediction"}
    assert [int(r["N"]) for r in rows] == sorted(int(r["N"]) for r in rows)


@pytest.mark.parametrize("argv", [
    ["coeffs", "--lambda", "-1", "--mu", "1", "--dim", "3"],
    ["coeffs", "--mu", "0"],
    ["rayleigh", "--alpha", "1.5"],
    ["shift", "--bc", "dir", "--grid", "1"],
    ["shift", "--bc", "dir", "--xi", "0"],
    ["count", "--model", "disk", "--bc", "dir", "--lambda-max", "-5"],
    ["count", "--model", "cylinder", "--bc", "dir", "--lambda-max", "5", "--h", "0"],
])
def test_config_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_corrupt_cache_exits_2(tmp_path, capsys):
    cache = tmp_path / "bad.csv"
    cache.write_text("not a cache\n")
    code, _, err = run(["count", "--model", "disk", "--bc", "dir", "--lambda-max", "10",
                        "--cache", str(cache)], capsys)
    assert code == 2 and "header" in err


@pytest.mark.parametrize("exc", [QuadratureError("no convergence"), SeriesError("pole"),
                                 ScanBudgetError("too many branches")])
def test_numerical_failure_exits_3(monkeypatch, capsys, exc):
    def fail(*args, **kwargs):
        raise exc

    monkeypatch.setattr(cli, "compute_coefficients", fail)
    code, out, err = run(["coeffs", "--dim", "3"], capsys)
    assert code == 3 and out == ""
    assert err.startswith("numerical failure") and str(exc) in err


def test_argparse_rejects_unknown_choice():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--model", "sphere", "--bc", "dir", "--lambda-max", "1"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "elastoweyl", "rayleigh", "--alpha", "0.25"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "0.869604565233" in res.stdout
