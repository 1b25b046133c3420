import json
from pathlib import Path

import pytest

from fdhom.schema import (
    SchemaError,
    canonical_dumps,
    digest,
    parse_algebra,
    parse_module,
    serialize_algebra,
    serialize_module,
)

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_quiver_algebra_fixture():
    alg = parse_algebra(FIXTURES / "a2.json")
    assert alg.dim == 3 and alg.p == 2
    assert len(alg.idempotents) == 2


def test_parse_table_algebra_fixture():
    alg = parse_algebra(FIXTURES / "kx2_table.json")
    assert alg.dim == 2 and alg.p == 2


def test_parse_module_fixture():
    m = parse_module(FIXTURES / "a2_s1.json")
    assert m.side == "left" and m.dim == 1


def test_parse_right_module():
    doc = {
        "algebra": {"kind": "quiver", "p": 2, "vertices": ["1", "2"],
                    "arrows": [{"name": "a", "source": "1", "target": "2"}],
                    "relations": []},
        "side": "right",
        "dims": {"1": 1, "2": 1},
        "action": {"a": [[1]]},
    }
    m = parse_module(doc)
    assert m.side == "right" and m.dim == 2
    m.validate()


def test_serialize_parse_fixpoint_on_fixtures():
    for name in ("a2.json", "kx2_table.json"):
        alg = parse_algebra(FIXTURES / name)
        doc = serialize_algebra(alg)
        alg2 = parse_algebra(doc)
        assert alg == alg2
        assert canonical_dumps(serialize_algebra(alg2)) == canonical_dumps(doc)
    for name in ("a2_s1.json", "a2_reg.json", "kx2_s.json"):
        m = parse_module(FIXTURES / name)
        doc = serialize_module(m)
        m2 = parse_module(doc)
        assert m2 == m
        assert canonical_dumps(serialize_module(m2)) == canonical_dumps(doc)


def test_schema_error_names_field():
    with pytest.raises(SchemaError, match="algebra.*missing field 'p'"):
        parse_algebra({"kind": "table"})
    with pytest.raises(SchemaError, match="side"):
        parse_module({"algebra": {"kind": "table", "p": 2, "dim": 1,
                                  "basis": ["e"], "unit": [1],
                                  "products": [[[1]]]},
                      "side": "middle", "dim": 1, "action": {"e": [[1]]}})


def test_schema_error_on_bad_matrix_shape():
    doc = {
        "algebra": str(FIXTURES / "a2.json"),
        "side": "left",
        "dims": {"1": 1, "2": 1},
        "action": {"a": [[1, 1]]},
    }
    with pytest.raises(SchemaError, match="shape"):
        parse_module(doc, base_dir=FIXTURES)


def test_module_with_algebra_by_relative_path():
    m = parse_module(FIXTURES / "a2_reg.json")
    assert m.dim == 3


def test_digest_is_format_insensitive():
    raw1 = json.loads((FIXTURES / "a2.json").read_text())
    raw2 = json.loads(json.dumps(raw1, indent=None))
    assert digest(raw1) == digest(raw2)


def test_invalid_json_reports_line():
    bad = FIXTURES / "broken.json"
    with pytest.raises(SchemaError, match="line"):
        parse_algebra(bad)
