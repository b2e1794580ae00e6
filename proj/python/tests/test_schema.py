import json
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

import deltaring as dr


@pytest.fixture(scope="module")
def validator(schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema)


COMMANDS = [
    ["info", "Z4"],
    ["info", "M(2,Z2)"],
    ["check", "uj", "M(2,Z2)"],
    ["check", "2-delta-u", "Z12"],
    ["verify", "T3.8", "T2.1"],
    ["search", "--include", "delta-u", "--exclude", "uj", "--max-order", "32"],
    ["classes"],
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a))
def test_cli_json_matches_schema(cli, validator, args):
    proc = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
    assert proc.returncode in (0, 1), proc.stderr
    validator.validate(json.loads(proc.stdout))


def test_python_reports_match_schema(validator):
    validator.validate(dr.info("GR(Z2,C2)"))
    validator.validate(dr.check("uu", "T(2,Z2)"))
    validator.validate(dr.verify("T3.8", max_order=64))


def test_schema_rejects_malformed(validator):
    bad = dr.check("uj", "Z4")
    bad["verdict"] = "yes"
    with pytest.raises(jsonschema.ValidationError):
        validator.validate(bad)
    with pytest.raises(jsonschema.ValidationError):
        validator.validate({"kind": "nope"})


def test_python_matches_cli(cli):
    proc = subprocess.run([cli, "--json", "info", "T(2,Z3)"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == dr.info("T(2,Z3)")
