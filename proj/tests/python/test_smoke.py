import json
import pathlib

import jsonschema
import pytest

import slopekit

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas" / "v1"


def validate(doc):
    kind = doc["schema"].rsplit("/", 1)[-1]
    schema = json.loads((SCHEMAS / f"{kind}.json").read_text())
    jsonschema.validate(doc, schema)


def cli_json(*args):
    rc, out, err = slopekit.run_cli(["--format", "json", *args])
    assert rc == 0, err
    return json.loads(out)


def test_polygon_and_attainability():
    np = slopekit.polygon("(1/3 x3)(2/3 x3)")
    assert np["segments"] == [{"slope": "1/3", "width": 3}, {"slope": "2/3", "width": 3}]
    assert slopekit.np_compare("1/2x6", "(1/3x3)(2/3x3)") == "above"
    w = slopekit.np_attain("1/2x6", "1/3")
    assert w["witness_compact"] == "(1/3 x3)(2/3 x3)"
    assert w["inserted"] == [3, 1]
    assert slopekit.np_attain("1/2x6", "2/3") is None


def test_deform_strata():
    rep = slopekit.deform("ss6", "1/3")
    assert rep["strata"]["P_star"] == [[2, 1], [3, 1], [3, 2], [4, 2]]
    assert rep["monodromy"]["lambda"] == "1/3"


def test_generation_and_errors():
    g = slopekit.generation_check(3, 2, 3, [0, 1, 2], "1/2")
    assert g["generates"] and g["order"] == 648
    with pytest.raises(slopekit.SlopekitError, match="Precondition"):
        slopekit.deform("ss6", "2/3")


def test_cli_is_deterministic():
    args = ["--format", "json", "--seed", "7", "deform", "--base", "ss6", "--lambda", "1/3"]
    first = slopekit.run_cli(args)
    assert first[0] == 0
    assert slopekit.run_cli(args) == first


def test_cli_exit_codes():
    assert slopekit.run_cli(["np", "compare", "1/2x6", "1/2x6"])[0] == 0
    assert slopekit.run_cli(["certify", "--base", "ss6", "--lambda", "2/3"])[0] == 2
    assert slopekit.run_cli(["np", "compare", "1/2x6", "(1/2"])[0] == 4


def test_plot_draws_every_lattice_point():
    rc, out, _ = slopekit.run_cli(["--format", "svg", "plot", "--d", "3", "--c", "3", "--lambda", "1/3"])
    assert rc == 0
    svg = out.decode()
    assert svg.startswith("<svg") or svg.startswith("<?xml")
    assert svg.count("<circle") == 9


@pytest.mark.parametrize(
    "args",
    [
        ["np", "compare", "1/2x6", "(1/3x3)(2/3x3)"],
        ["np", "attain", "--poly", "1/2x6", "--lambda", "1/3"],
        ["np", "adjoin", "--poly", "1/2x4", "--point", "1,0"],
        ["np", "symmetric", "--poly", "(1/3x3)(2/3x3)"],
        ["deform", "--base", "ss6", "--lambda", "1/3"],
        ["as", "test", "--q", "4", "--field", "F16", "--all"],
        ["units", "verify", "--s", "2", "--n", "3"],
        ["plot", "--d", "3", "--c", "3", "--lambda", "1/3"],
    ],
)
def test_cli_json_matches_schema(args):
    validate(cli_json(*args))


def test_certificate_matches_schema():
    doc = cli_json("certify", "--base", "ss6", "--lambda", "1/3")
    validate(doc)
    assert doc["verdict"] == "large"
    assert doc["pieces"] == [0, 1, 3]
    # Every leg holds at p = 3, s = 4, but no closure quotient fits the default guard.
    rc, out, _ = slopekit.run_cli(["--format", "json", "certify", "--base", "ss8", "--lambda", "1/4"])
    assert rc == 3
    doc = json.loads(out)
    validate(doc)
    assert doc["verdict"] == "not certified"
    assert doc["closure"] is None
    assert all(leg["status"] == "certified" for leg in doc["legs"])
