"""End-to-end tests of the command-line interface."""

import io
import json
from importlib import resources

import jsonschema
import pytest

from chsurf.cli import parse_q, parse_rational, run
from fractions import Fraction


def invoke(*argv):
    out, err = io.BytesIO(), io.BytesIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().decode("utf-8"), err.getvalue().decode("utf-8")


def load_schema(name):
    text = resources.files("chsurf.schemas").joinpath(name).read_text()
    return json.loads(text)


def validate(record, schema_name):
    jsonschema.validate(record, load_schema(schema_name))


# -- argument parsing -------------------------------------------------------------


def test_parse_rational():
    assert parse_rational("1/4") == Fraction(1, 4)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(Exception):
        parse_rational("abc")


def test_parse_q_sugar():
    assert parse_q("-1") == Fraction(-1)
    assert parse_q("p=i") == Fraction(-1)
    assert parse_q("p=1") == Fraction(1)
    assert parse_q("p=3/2") == Fraction(9, 4)
    assert parse_q("p=2i") == Fraction(-4)


# -- subcommands ------------------------------------------------------------------


def test_curve_props_golden_line():
    code, out, err = invoke("curve-props", "--n", "7", "--d", "3", "--a", "1/4")
    assert code == 0
    assert out == '{"order":20,"origin":14,"absolute":6,"shape":"prolate"}\n'
    validate(json.loads(out), "curve_props.schema.json")


def test_curve_props_decimal_input():
    code, out, _ = invoke("curve-props", "--n", "7", "--d", "3", "--a", "0.25")
    assert code == 0
    assert json.loads(out)["order"] == 20


def test_curve_implicit_schema_and_content():
    code, out, _ = invoke("curve-implicit", "--n", "1", "--d", "1")
    assert code == 0
    record = json.loads(out)
    validate(record, "polynomial.schema.json")
    assert record["vars"] == ["x", "y"]
    assert {"exp": [2, 0], "re": "1/1", "im": "0/1"} in record["terms"]
    code, out, _ = invoke("curve-implicit", "--n", "1", "--d", "1", "--homogeneous")
    assert json.loads(out)["vars"] == ["x0", "x1", "x2"]


def test_curve_sample_csv(tmp_path):
    target = tmp_path / "curve.csv"
    code, out, _ = invoke(
        "curve-sample", "--n", "3", "--d", "1", "--samples", "8",
        "--cx", "-1", "--out", str(target),
    )
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "phi,x,y,z"
    assert len(lines) == 9
    first = [float(v) for v in lines[1].split(",")]
    assert first == pytest.approx([0.0, 0.0, 0.0, 0.0])  # petal tip on the axis


def test_surface_classify_golden():
    code, out, _ = invoke(
        "surface-classify", "--n", "9", "--d", "2", "--a", "2",
        "--q", "-1", "--cx", "0", "--cy", "0", "--h", "1",
    )
    assert code == 0
    record = json.loads(out)
    validate(record, "classification.schema.json")
    assert record == {
        "type": "2B",
        "order": 40,
        "absolute_conic": 4,
        "axis": 32,
        "directing_points": 36,
    }


def test_surface_classify_csv_sidecars(tmp_path):
    circles = tmp_path / "circles.csv"
    waist = tmp_path / "waist.csv"
    code, out, _ = invoke(
        "surface-classify", "--n", "3", "--d", "1", "--cx", "1",
        "--q", "-1", "--singular-circles-csv", str(circles),
        "--waist-points-csv", str(waist),
    )
    assert code == 0
    assert json.loads(out)["type"] == "5A"
    assert circles.read_text().splitlines()[0] == "meridian_angle,center_offset,radius,multiplicity"
    waist_lines = waist.read_text().splitlines()
    assert waist_lines[0] == "x,y,z"
    assert len(waist_lines) == 4  # three distinct contact points


def test_surface_classify_p_sugar():
    code, out, _ = invoke(
        "surface-classify", "--n", "9", "--d", "2", "--a", "2", "--q", "p=i", "--h", "1",
    )
    assert json.loads(out)["order"] == 40


def test_figure_list_and_export(tmp_path):
    code, out, _ = invoke("figure", "--list")
    assert code == 0
    assert out.splitlines()[0].startswith("3a")
    target = tmp_path / "fig3b.obj"
    code, _, _ = invoke("figure", "3b", "--nt", "64", "--ntheta", "16", "--out", str(target))
    assert code == 0
    content = target.read_text()
    assert content.startswith("v ")
    assert "\nf " in content


def test_curve_sample_stdout():
    code, out, _ = invoke("curve-sample", "--n", "1", "--d", "1", "--samples", "4")
    assert code == 0
    assert out.splitlines()[0] == "phi,x,y,z"
    assert len(out.splitlines()) == 5


def test_surface_mesh_stdout():
    code, out, _ = invoke(
        "surface-mesh", "--n", "1", "--d", "1", "--q", "1",
        "--nt", "16", "--ntheta", "8",
    )
    assert code == 0
    assert out.startswith("v ")


def test_verify_table2_text_and_json():
    code, out, _ = invoke("verify", "table2", "--max-nd", "4")
    assert code == 0
    assert "passed, 0 failed" in out.splitlines()[-1]
    code, out, _ = invoke("verify", "table2", "--max-nd", "4", "--format", "json")
    assert code == 0
    record = json.loads(out)
    validate(record, "verify_report.schema.json")
    assert record["ok"] is True


def test_verify_single_spec_residual():
    code, out, _ = invoke(
        "verify", "residual", "--n", "7", "--d", "3", "--a", "1/4", "--format", "json"
    )
    assert code == 0
    record = json.loads(out)
    assert record["passed"] == 1 and record["failed"] == 0
    assert "CH(7,3,1/4)" in record["checks"][0]["name"]


def test_verify_deterministic_output():
    args = ("verify", "table1", "--max-nd", "2", "--seed", "11", "--format", "json")
    assert invoke(*args) == invoke(*args)


def test_verify_seed_from_environment(monkeypatch):
    monkeypatch.setenv("CHS_SEED", "23")
    _, from_env, _ = invoke("verify", "table1", "--max-nd", "2", "--format", "json")
    monkeypatch.delenv("CHS_SEED")
    _, from_flag, _ = invoke(
        "verify", "table1", "--max-nd", "2", "--seed", "23", "--format", "json"
    )
    assert from_env == from_flag
    assert json.loads(from_env)["seed"] == 23


# -- exit codes ---------------------------------------------------------------------


def test_usage_error_exit_2():
    code, _, err = invoke("curve-props", "--n", "7")
    assert code == 2
    assert "required" in err


def test_unknown_command_exit_2():
    code, _, _ = invoke("no-such-command")
    assert code == 2


def test_domain_error_exit_1():
    code, _, err = invoke("curve-props", "--n", "6", "--d", "3")
    assert code == 1
    assert "lowest terms" in err


def test_figure_unknown_preset_exit_1():
    code, _, err = invoke("figure", "zz")
    assert code == 1
    assert "unknown figure preset" in err


def test_help_exit_0():
    code, out, _ = invoke("--help")
    assert code == 0
    assert "curve-props" in out
