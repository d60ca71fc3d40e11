import json

import pytest

from charmonoid.dataio import (
    emit_dataset,
    emit_report,
    parse_dataset,
    render_binomial,
    render_monomial,
)
from charmonoid.errors import InvariantViolation, SchemaError


def s3_doc():
    return {
        "schema_version": 1,
        "group": {"name": "S3", "order": 6},
        "irr": [
            {"label": "chi1", "degree": 1},
            {"label": "chi2", "degree": 1},
            {"label": "chi3", "degree": 2},
        ],
        "induced_rows": [
            {"row": [1, 0, 0], "subgroup_order": 6},
            {"row": [0, 1, 0], "subgroup_order": 6},
            {"row": [1, 1, 2], "subgroup_order": 1},
            {"row": [1, 0, 1], "subgroup_order": 2},
            {"row": [0, 1, 1], "subgroup_order": 2},
            {"row": [1, 1, 0], "subgroup_order": 3},
            {"row": [0, 0, 1], "subgroup_order": 3, "count": 2},
        ],
        "classes": [1, 3, 2],
    }


def test_parse_valid_dataset():
    data = parse_dataset(json.dumps(s3_doc()))
    assert data.name == "S3"
    assert data.rank == 3
    assert data.degrees == (1, 1, 2)
    assert data.hilbert().generators == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_parse_round_trip():
    data = parse_dataset(json.dumps(s3_doc()))
    again = parse_dataset(emit_dataset(data))
    assert again == data
    assert emit_dataset(again) == emit_dataset(data)


def test_wrong_row_length_names_the_row():
    doc = s3_doc()
    doc["induced_rows"][3] = {"row": [1, 0]}
    with pytest.raises(SchemaError) as err:
        parse_dataset(json.dumps(doc))
    assert "induced_rows[3]" in str(err.value)


def test_first_degree_must_be_one():
    doc = s3_doc()
    doc["irr"][0]["degree"] = 2
    with pytest.raises(InvariantViolation) as err:
        parse_dataset(json.dumps(doc))
    assert "trivial character first" in str(err.value)


def test_degree_consistency_enforced():
    doc = s3_doc()
    doc["induced_rows"][3]["row"] = [1, 0, 2]  # degree 5 != index 3
    with pytest.raises(InvariantViolation) as err:
        parse_dataset(json.dumps(doc))
    assert "row degree equals subgroup index" in str(err.value)


def test_trivial_row_required():
    doc = s3_doc()
    doc["induced_rows"] = [e for e in doc["induced_rows"] if e["row"] != [1, 0, 0]]
    with pytest.raises(InvariantViolation):
        parse_dataset(json.dumps(doc))


def test_big_integers_as_strings():
    doc = s3_doc()
    doc["group"]["order"] = str(2**80 * 3)  # absurd but schema-legal
    del doc["classes"]
    doc["induced_rows"] = [
        {"row": [1, 0, 0]},
        {"row": [str(2**70), 1, 1]},
    ]
    data = parse_dataset(json.dumps(doc))
    assert data.order == 2**80 * 3
    assert data.induced_rows[1].row[0] == 2**70
    emitted = json.loads(emit_dataset(data))
    assert emitted["induced_rows"][1]["row"][0] == str(2**70)


def test_render_monomial():
    assert render_monomial((1, 0, 0, 0, 0, 0, 0)) == "x1"
    assert render_monomial((0, 1, 1, 1, 2, 2, 2)) == "x2x3x4x5^2x6^2x7^2"
    assert render_monomial((0, 0, 0)) == "1"
    assert render_binomial((0, 0, 0, 0, 1, 1, 1, 0), (0, 0, 0, 0, 0, 0, 0, 2)) == (
        "t5t6t7 - t8^2"
    )


def test_render_monomial_injective(rng):
    seen = {}
    for _ in range(300):
        v = tuple(rng.randint(0, 3) for _ in range(4))
        s = render_monomial(v)
        assert seen.setdefault(s, v) == v


def test_emit_report_deterministic():
    bundle = {"group": "S3", "flags": {"monomial": True}, "items": [1, 2, 3]}
    assert emit_report(bundle, "json") == emit_report(bundle, "json")
    assert emit_report(bundle, "table") == emit_report(bundle, "table")
    parsed = json.loads(emit_report(bundle, "json"))
    assert parsed["flags"]["monomial"] is True
    table = emit_report(bundle, "table").decode()
    assert "monomial: yes" in table
