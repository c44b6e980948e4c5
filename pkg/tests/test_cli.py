"""End-to-end command-line tests: exit codes, report schema, artifacts."""

import csv
import json
import shutil
import subprocess
import sys

import pytest

from isocurv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out else None
    return code, report, captured.err


def write_spec(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


CASE_A = {"kind": "CaseA", "f0": 1.0, "m0": 1.0, "n0": 2.0, "d1": 0.0, "d2": 0.0}
CASE_31 = {
    "kind": "Case31Candidate",
    "c3": 1.0,
    "c4": 1.0,
    "d7": 0.0,
    "d8": 0.0,
    "d9": 0.0,
    "m0": 1.0,
}


# -- eval ---------------------------------------------------------------------------


def test_eval_report(capsys):
    code, report, err = run_cli(
        capsys, "eval", "--surface", "x^2*y+3*x*y", "--at", "2,5"
    )
    assert code == 0
    assert err == ""
    assert report["schema_version"] == 1
    assert report["command"] == "eval"
    assert report["surface"] == "x^2*y+3*x*y"
    assert report["params"] == {"at": [2.0, 5.0]}
    assert report["result"]["jet"] == {
        "v": 50.0,
        "dx": 35.0,
        "dy": 10.0,
        "dxx": 10.0,
        "dxy": 7.0,
        "dyy": 0.0,
    }
    assert report["result"]["K"] == -49.0
    assert report["result"]["H"] == 5.0
    assert report["result"]["euler_residual"] == 296.0
    assert report["pass"] is None


def test_eval_normalizes_surface_text(capsys):
    code, report, _ = run_cli(capsys, "eval", "--surface", " x + (y) ", "--at", "0,0")
    assert code == 0
    assert report["surface"] == "x+y"


def test_eval_parse_error(capsys):
    code, report, err = run_cli(capsys, "eval", "--surface", "x + * y", "--at", "0,0")
    assert code == 2
    assert report is None
    assert err.startswith("error:")
    assert "(offset 4)" in err


def test_eval_singularity_is_an_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--surface", "1/x", "--at", "0,0")
    assert code == 2
    assert "error:" in err


def test_eval_is_byte_stable(capsys):
    main(["eval", "--surface", "exp(x)*sin(y)", "--at", "0.3,0.7"])
    first = capsys.readouterr().out
    main(["eval", "--surface", "exp(x)*sin(y)", "--at", "0.3,0.7"])
    second = capsys.readouterr().out
    assert first == second


# -- scan ---------------------------------------------------------------------------


def test_scan_lw_pass(capsys):
    code, report, _ = run_cli(
        capsys,
        "scan",
        "--surface",
        "0.5*(x^2+y^2)",
        "--residual",
        "lw",
        "--a",
        "1",
        "--b",
        "1",
        "--c",
        "2",
    )
    assert code == 0
    assert report["pass"] is True
    assert report["result"]["max_abs"] == 0.0
    assert report["result"]["n_samples"] == 101 * 101
    assert report["params"]["lw"] == {"a": 1.0, "b": 1.0, "c": 2.0, "m0": 0.5, "n0": 2.0}
    assert report["tolerances"] == {"lw": 1e-9}


def test_scan_euler_fail(capsys):
    code, report, _ = run_cli(
        capsys, "scan", "--surface", "x*y", "--residual", "euler", "--grid", "5,5"
    )
    assert code == 1
    assert report["pass"] is False
    assert report["result"]["max_abs"] == 4.0
    assert report["result"]["std_dev"] == 0.0


def test_scan_tol_override_flips_the_verdict(capsys):
    code, report, _ = run_cli(
        capsys,
        "scan",
        "--surface",
        "x*y",
        "--residual",
        "euler",
        "--grid",
        "5,5",
        "--tol",
        "10",
    )
    assert code == 0
    assert report["pass"] is True
    assert report["tolerances"] == {"euler": 10.0}


def test_scan_jacobian(capsys):
    code, report, _ = run_cli(
        capsys,
        "scan",
        "--surface",
        "0.5*(x^2+y^2)",
        "--residual",
        "jacobian",
        "--grid",
        "7,7",
    )
    assert code == 0
    assert report["pass"] is True
    assert report["params"]["fd_step"] == 1e-3
    assert report["tolerances"] == {"jacobian": 1e-6}


def test_scan_lw_requires_coefficients(capsys):
    code, report, err = run_cli(
        capsys, "scan", "--surface", "x*y", "--residual", "lw", "--a", "1"
    )
    assert code == 2
    assert report is None
    assert "--a, --b, and --c" in err


def test_scan_lw_without_k_term_skips_normalization(capsys):
    code, report, _ = run_cli(
        capsys,
        "scan",
        "--surface",
        "x^2-y^2",
        "--residual",
        "lw",
        "--a",
        "1",
        "--b",
        "0",
        "--c",
        "0",
        "--grid",
        "5,5",
    )
    assert code == 0
    assert report["pass"] is True
    assert report["params"]["lw"] == {"a": 1.0, "b": 0.0, "c": 0.0}


def test_scan_domain_flags(capsys):
    code, report, _ = run_cli(
        capsys,
        "scan",
        "--surface",
        "x*y",
        "--residual",
        "euler",
        "--domain",
        "0,2,0,4",
        "--grid",
        "3,5",
        "--tol",
        "5",
    )
    assert code == 0
    assert report["params"]["domain"] == [0.0, 2.0, 0.0, 4.0]
    assert report["params"]["grid"] == [3, 5]
    assert report["result"]["n_samples"] == 15


# -- verify-family ------------------------------------------------------------------


def test_verify_family_constant(capsys, tmp_path):
    spec_path = write_spec(tmp_path, "a.json", CASE_A)
    code, report, _ = run_cli(capsys, "verify-family", "--spec", spec_path)
    assert code == 0
    assert report["pass"] is True
    assert report["surface"] == "1*(2*y^2)"
    assert report["result"]["check"] == "constant_invariants"
    assert report["result"]["predicted"] == {"K": 0.0, "H": 2.0}
    assert report["result"]["max_abs"] == 0.0
    assert report["params"]["spec"] == CASE_A
    assert report["tolerances"] == {"family": 1e-9}


def test_verify_family_contradiction(capsys, tmp_path):
    spec_path = write_spec(tmp_path, "c31.json", CASE_31)
    code, report, _ = run_cli(capsys, "verify-family", "--spec", spec_path)
    assert code == 0
    assert report["pass"] is True
    assert report["result"]["check"] == "contradiction_scan"
    # the pole column x = 0 is excluded by the default radius
    assert report["result"]["n_samples"] == 100
    assert report["result"]["std_dev"] > 0.0
    assert report["params"]["n0"] == 0.0
    assert report["tolerances"] == {"min_samples": 3}


def test_verify_family_contradiction_custom_n0(capsys, tmp_path):
    spec_path = write_spec(tmp_path, "c31.json", CASE_31)
    code, report, _ = run_cli(
        capsys, "verify-family", "--spec", spec_path, "--n0", "-1.0"
    )
    assert code == 0
    assert report["pass"] is True  # shifting n0 cannot make the defect constant
    assert report["params"]["n0"] == -1.0


def test_verify_family_malformed_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, report, err = run_cli(capsys, "verify-family", "--spec", str(path))
    assert code == 2
    assert report is None
    assert "invalid JSON" in err


def test_verify_family_unknown_kind(capsys, tmp_path):
    spec_path = write_spec(tmp_path, "z.json", {"kind": "CaseZ"})
    code, _, err = run_cli(capsys, "verify-family", "--spec", spec_path)
    assert code == 2
    assert "unknown family kind" in err


def test_verify_family_missing_file(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "verify-family", "--spec", str(tmp_path / "nope.json")
    )
    assert code == 2
    assert "error:" in err


# -- ode ----------------------------------------------------------------------------


def test_ode_saturated_linear_with_implicit_oracle(capsys, tmp_path):
    out = tmp_path / "traj.csv"
    code, report, _ = run_cli(
        capsys,
        "ode",
        "--ode",
        "saturated-linear",
        "--c5",
        "1",
        "--f0",
        "1",
        "--fp0",
        "0",
        "--t-end",
        "1",
        "--step",
        "0.001",
        "--out",
        str(out),
    )
    assert code == 0
    assert report["pass"] is True
    assert report["result"]["n_steps"] == 1000
    assert report["result"]["oracle_max_dev"] < 1e-6
    assert report["result"]["csv"] == str(out)
    assert report["surface"] is None
    assert report["tolerances"] == {"oracle": 1e-6}

    with open(out, newline="", encoding="ascii") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["t", "f", "fp"]
    assert len(rows) == 1002
    assert [float(v) for v in rows[1]] == [0.0, 1.0, 0.0]
    assert float(rows[-1][0]) == pytest.approx(1.0, abs=1e-12)


def test_ode_shifted_reciprocal_with_oracle_flags(capsys):
    code, report, _ = run_cli(
        capsys,
        "ode",
        "--ode",
        "shifted-reciprocal",
        "--c3",
        "1",
        "--m0",
        "1",
        "--f0",
        "-1",
        "--fp0",
        "0.25",
        "--t-end",
        "2",
        "--step",
        "0.001",
        "--oracle-c4",
        "1",
        "--oracle-d9",
        "2",
    )
    assert code == 0
    assert report["pass"] is True
    assert report["result"]["oracle_max_dev"] < 1e-6
    assert report["result"]["endpoint"]["f"] == pytest.approx(-0.75, abs=1e-9)
    assert report["params"]["c3"] == 1.0


def test_ode_saturated_with_d10_has_no_oracle(capsys):
    code, report, _ = run_cli(
        capsys,
        "ode",
        "--ode",
        "saturated-linear",
        "--c5",
        "1",
        "--d10",
        "0.5",
        "--f0",
        "0.1",
        "--fp0",
        "0",
        "--t-end",
        "1",
        "--step",
        "0.01",
    )
    assert code == 0
    assert report["pass"] is None
    assert report["result"]["oracle_max_dev"] is None
    assert report["tolerances"] == {}
    assert report["result"]["csv"] is None


def test_ode_missing_rhs_parameters(capsys):
    code, _, err = run_cli(
        capsys,
        "ode",
        "--ode",
        "shifted-reciprocal",
        "--f0",
        "1",
        "--fp0",
        "0",
        "--t-end",
        "1",
        "--step",
        "0.1",
    )
    assert code == 2
    assert "--c3 and --m0" in err


def test_ode_oracle_flags_must_pair(capsys):
    code, _, err = run_cli(
        capsys,
        "ode",
        "--ode",
        "shifted-reciprocal",
        "--c3",
        "1",
        "--m0",
        "1",
        "--f0",
        "-1",
        "--fp0",
        "0.25",
        "--t-end",
        "1",
        "--step",
        "0.1",
        "--oracle-c4",
        "1",
    )
    assert code == 2
    assert "go together" in err


def test_ode_oversized_step_is_an_error(capsys):
    code, _, err = run_cli(
        capsys,
        "ode",
        "--ode",
        "saturated-linear",
        "--c5",
        "9",
        "--f0",
        "1",
        "--fp0",
        "0",
        "--t-end",
        "2",
        "--step",
        "1",
    )
    assert code == 2
    assert "local error" in err


def test_ode_degenerate_start_is_an_error(capsys):
    code, _, err = run_cli(
        capsys,
        "ode",
        "--ode",
        "shifted-reciprocal",
        "--c3",
        "1",
        "--m0",
        "1",
        "--f0",
        "-0.5",
        "--fp0",
        "1",
        "--t-end",
        "1",
        "--step",
        "0.1",
    )
    assert code == 2
    assert "denominator" in err


# -- mesh ---------------------------------------------------------------------------


def test_mesh_from_surface(capsys, tmp_path):
    out = tmp_path / "patch.obj"
    code, report, _ = run_cli(
        capsys,
        "mesh",
        "--surface",
        "x*y",
        "--out",
        str(out),
        "--grid",
        "3,3",
    )
    assert code == 0
    assert report["result"] == {"n_vertices": 9, "n_triangles": 8, "obj": str(out)}
    lines = out.read_text(encoding="ascii").splitlines()
    assert len([ln for ln in lines if ln.startswith("f ")]) == 8
    assert len([ln for ln in lines if ln.startswith("v ")]) == 9


def test_mesh_from_spec_excludes_the_pole(capsys, tmp_path):
    spec_path = write_spec(tmp_path, "c31.json", CASE_31)
    out = tmp_path / "candidate.obj"
    code, report, _ = run_cli(
        capsys,
        "mesh",
        "--spec",
        spec_path,
        "--out",
        str(out),
        "--grid",
        "5,3",
        "--exclusion",
        "0.1",
    )
    assert code == 0
    assert report["result"]["n_vertices"] == 12
    assert report["result"]["n_triangles"] == 8
    assert report["params"]["spec"] == CASE_31
    assert report["surface"] == "-(1/(1*x)+0.5)*(1*y^2)"


def test_mesh_surface_and_spec_are_exclusive(tmp_path):
    with pytest.raises(SystemExit) as exc_info:
        main(
            [
                "mesh",
                "--surface",
                "x*y",
                "--spec",
                "whatever.json",
                "--out",
                str(tmp_path / "o.obj"),
            ]
        )
    assert exc_info.value.code == 2


def test_mesh_requires_out(tmp_path):
    with pytest.raises(SystemExit) as exc_info:
        main(["mesh", "--surface", "x*y"])
    assert exc_info.value.code == 2


# -- process-level smoke -------------------------------------------------------------


def test_console_script_runs():
    exe = shutil.which("isocurv")
    assert exe is not None, "console script not installed"
    proc = subprocess.run(
        [exe, "eval", "--surface", "x*y", "--at", "1,2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["result"]["K"] == -1.0


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "isocurv", "eval", "--surface", "x*y", "--at", "1,2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["H"] == 0.0
