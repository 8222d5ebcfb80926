import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from semigraded import corpus
from semigraded.cli import main

SCHEMA = json.loads((resources.files("semigraded") / "data" / "report.schema.json").read_text())


def data(name):
    return str(corpus.path(name))


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "semigraded", *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--json", "-")
    text = out[out.index("{\n") :]
    report = json.loads(text)
    jsonschema.validate(report, SCHEMA)
    assert report["exit_code"] == code
    return code, out, report


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_check_pass():
    code, out, report = run_json("check", data("weyl_q"), "--bound", "6")
    assert code == 0
    assert out.startswith("PASS")
    assert report["result"]["ok"] is True
    assert report["parameters"] == {"bound": 6}
    assert report["wall_time_s"] is None


def test_check_syntax_error(tmp_path):
    bad = tmp_path / "bad.sga"
    bad.write_text("field Q\ngen x 1\ngen y 1\nrel y*x = x*y +\n")
    code, out, err = run("check", str(bad))
    assert code == 1
    assert out == ""
    assert "SYNTAX_ERROR" in err and "line 4" in err


def test_check_missing_file(tmp_path):
    code, _, err = run("check", str(tmp_path / "missing.sga"))
    assert code == 1 and "cannot read" in err


def test_check_non_confluent(tmp_path):
    nc = tmp_path / "nc.sga"
    nc.write_text("field Q\ngen x 1\ngen y 1\ngen z 1\nrel y*x = x*y + z\nrel z*x = 2*x*z\nrel z*y = y*z\n")
    code, out, report = run_json("check", str(nc), "--bound", "4")
    assert code == 2
    assert "witness z*y*x" in out
    assert report["result"]["violations"]


def test_analyze_rpp():
    code, out, report = run_json("analyze", data("3dim"), "rpp", "2", "--bound", "8")
    assert code == 0
    assert out.splitlines()[0] == "R''_2 = span{ z^2 } (exact)"
    assert report["result"]["exact"] is True


def test_analyze_center():
    code, out, _ = run("analyze", data("weyl_gf2"), "center", "--max-exp", "4")
    assert (code, out) == (0, "x^2 central; y^2 central\n")


def test_analyze_nf():
    code, out, report = run_json("analyze", data("weyl_q"), "nf", "y*x^3")
    assert code == 0
    assert out.splitlines()[0] == "x^3*y + 3*x^2"
    assert report["result"]["components"] == {"2": "3*x^2", "4": "x^3*y"}


def test_analyze_localize():
    code, out, report = run_json("analyze", data("3dim"), "localize", "--den", "z", "(x*z + x)/z^2")
    assert code == 0
    assert out.splitlines()[0] == "(x*z + x)/z^2"
    assert report["result"]["components"] == {"-1": "(x)/z^2", "0": "(x)/z"}


def test_analyze_bad_denominator():
    code, _, err = run("analyze", data("3dim"), "localize", "--den", "x", "x")
    assert code == 1 and "NOT_CENTRAL" in err


def test_analyze_refuses_invalid_presentation(tmp_path):
    nc = tmp_path / "nc.sga"
    nc.write_text("field Q\ngen x 1\ngen y 1\ngen z 1\nrel y*x = x*y + z\nrel z*x = 2*x*z\nrel z*y = y*z\n")
    code, _, err = run("analyze", str(nc), "nf", "x")
    assert code == 2 and "fails validation" in err


def test_schematic_classify_case_two():
    code, out, report = run_json("schematic", "--two-gen", "1,0,0,1", "--field", "GF(5)", "--mode", "classify")
    assert code == 0
    assert out.startswith("SCHEMATIC") and "case (2)" in out
    assert report["result"]["certificate"]["case"] == "2"
    assert report["field"] == "GF(5)"


def test_schematic_classify_negative():
    code, out, _ = run("schematic", "--two-gen", "1,1,0,0", "--mode", "classify")
    assert code == 3 and out.startswith("NOT_SCHEMATIC")


def test_schematic_classify_from_file():
    code, out, _ = run("schematic", data("weyl_gf3"), "--mode", "classify")
    assert code == 0 and "case (2)" in out


def test_schematic_evidence_refuted():
    code, out, report = run_json("schematic", data("3dim"), "--mode", "evidence", "--ore", "z", "-t", "3", "-m", "1", "--bound", "6")
    assert code == 3
    assert out.startswith("REFUTED_AT_BOUND")
    assert report["result"]["certificate"]["evidence"]["witness"] == "x^3"


def test_schematic_evidence_positive():
    code, out, _ = run("schematic", data("weyl_gf2"), "--mode", "evidence", "--ore", "x^2,y^2", "-t", "4", "--bound", "8")
    assert code == 0 and out.startswith("EVIDENCE_SCHEMATIC")


def test_schematic_central_powers():
    code, out, report = run_json("schematic", data("weyl_gf2"), "--mode", "central-powers", "--max-exp", "4", "--bound", "8")
    assert code == 0
    assert out.startswith("SCHEMATIC [central powers]")
    assert report["result"]["certificate"]["witnesses"] == ["x^2", "y^2"]


def test_schematic_inconclusive():
    code, out, _ = run("schematic", data("weyl_q"), "--mode", "central-powers", "--max-exp", "3", "--bound", "6")
    assert code == 4 and out.startswith("INCONCLUSIVE")


@pytest.mark.parametrize(
    "args",
    [
        ("schematic", "--mode", "classify"),
        ("schematic", "--two-gen", "1,0,0", "--mode", "classify"),
        ("schematic", "--mode", "evidence", "FILE"),
        ("schematic", "--two-gen", "1,0,0,1"),
        ("frobnicate",),
        (),
    ],
)
def test_usage_errors(args):
    args = tuple(data("3dim") if a == "FILE" else a for a in args)
    code, _, err = run(*args)
    assert code == 1
    assert "usage:" in err


def test_reports_are_deterministic():
    args = ("schematic", data("weyl_gf2"), "--mode", "central-powers", "--max-exp", "4", "--bound", "8", "--json", "-")
    assert run(*args)[1] == run(*args)[1]


def test_timing_is_opt_in(capsys):
    code = main(["analyze", data("weyl_q"), "nf", "x*y", "--json", "-", "--timing"])
    out = capsys.readouterr().out
    report = json.loads(out[out.index("{\n") :])
    assert code == 0
    assert isinstance(report["wall_time_s"], float)
    jsonschema.validate(report, SCHEMA)


def test_json_written_to_file(tmp_path):
    target = tmp_path / "r.json"
    assert main(["check", data("3dim"), "--json", str(target)]) == 0
    jsonschema.validate(json.loads(target.read_text()), SCHEMA)
