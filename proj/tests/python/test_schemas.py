"""Fixtures and CLI reports validate against the published JSON schemas."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).parents[2]
CLI = os.environ.get("DETSING_CLI", str(ROOT / "build" / "tools" / "detsing"))
FIXTURES = sorted((ROOT / "fixtures").glob("*.json"))


def schema(name):
    return json.loads((ROOT / "schemas" / name).read_text())


def run(*args):
    out = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    return out.returncode, out.stdout, out.stderr


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.stem)
def test_fixture_matches_descriptor_schema(path):
    jsonschema.validate(json.loads(path.read_text()), schema("variety.schema.json"))


@pytest.mark.parametrize(
    "args",
    [
        ("check", ROOT / "fixtures" / "surface_c4.json"),
        ("check", ROOT / "fixtures" / "degenerate.json"),
        ("invariants", ROOT / "fixtures" / "surface_c4.json", "--hyperplane", "p", "--le-greuel"),
        ("invariants", ROOT / "fixtures" / "plane_section_c4.json", "--mode", "modular"),
        ("genericity", ROOT / "fixtures" / "surface_c4.json", "--search", "--trials", "3"),
        ("demo-swallowtail",),
    ],
    ids=["check", "check-degenerate", "invariants", "invariants-modular", "search", "swallowtail"],
)
def test_report_matches_report_schema(args):
    code, out, err = run(*args)
    assert code == 0, err
    jsonschema.validate(json.loads(out), schema("report.schema.json"))


def test_parse_errors_exit_with_status_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": ["x"], "matrix": [["x +"]], "t": 1}')
    code, _, err = run("check", bad)
    assert code == 2
    assert "matrix[0][0]" in err
