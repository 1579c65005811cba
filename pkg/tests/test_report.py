import json

import jsonschema
import pytest
from hypothesis import given

from dilationk.cli import cmd_check, cmd_filterbank, cmd_ktheory, cmd_normdecay, cmd_verify
from dilationk.linalg import IntegerMatrix
from dilationk.report import REPORT_SCHEMA, RunReport

from conftest import EXAMPLES, int_matrices


def _all_reports():
    a = IntegerMatrix(EXAMPLES["det5"])
    return [cmd_check(a), cmd_check(IntegerMatrix([[2, 0], [0, 1]])), cmd_ktheory(a),
            cmd_ktheory(IntegerMatrix([[-3]])), cmd_filterbank(a), cmd_normdecay(a),
            cmd_verify(a, seed=1), cmd_verify(random_spec=(2, 3), seed=9)]


@pytest.mark.parametrize("rep", _all_reports(), ids=lambda r: r.command)
def test_schema_and_roundtrip(rep):
    data = json.loads(rep.to_json())
    jsonschema.validate(data, REPORT_SCHEMA)
    again = RunReport.from_json(rep.to_json())
    assert again == rep
    assert again.to_json() == rep.to_json()


def test_stable_keys_always_present():
    data = cmd_check(IntegerMatrix(EXAMPLES["neg2"])).to_dict()
    for key in ("d", "det", "dilation", "charpoly", "k0", "k1", "summands",
                "identity_class", "filterbank", "notes"):
        assert key in data
    assert "timing" not in data


def test_timing_is_optional_but_valid():
    rep = cmd_check(IntegerMatrix(EXAMPLES["neg2"]))
    rep.timing = {"seconds": 0.1}
    jsonschema.validate(rep.to_dict(), REPORT_SCHEMA)
    assert RunReport.from_json(rep.to_json()).timing == {"seconds": 0.1}


def test_unknown_keys_rejected():
    with pytest.raises(ValueError):
        RunReport.from_dict({"command": "check", "input": {}, "bogus": 1})


@given(int_matrices(1, 3, -4, 4))
def test_byte_identical(a):
    assert cmd_ktheory(a).to_json() == cmd_ktheory(a).to_json()


def test_groups_helper():
    k0, k1 = cmd_ktheory(IntegerMatrix(EXAMPLES["neg5"])).groups()
    assert str(k0) == "Z/2 ⊕ Z/4" and str(k1) == "Z/5"
    assert cmd_check(IntegerMatrix(EXAMPLES["neg5"])).groups() == (None, None)
