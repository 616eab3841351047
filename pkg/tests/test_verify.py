import json

import jsonschema
import pytest

from dpcolor import cli, verify


@pytest.fixture(scope="module")
def full_run():
    return verify.run_claims()


def test_claim_table_shape():
    claims = verify.load_claims()
    ids = [c["id"] for c in claims]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    for c in claims:
        assert c["quantity"] in verify.EVALUATORS
        assert c["relation"] in ("eq", "le", "ge")
        assert c["group"] == c["id"].split(".")[0]


def test_only_filters():
    claims = verify.load_claims()
    assert [c["id"] for c in verify.select(claims, ["q3"])] == ["q3.alpha2", "q3.not-nice"]
    assert [c["id"] for c in verify.select(claims, ["v8.tau"])] == ["v8.tau"]
    assert verify.select(claims, None) == claims


def test_full_run_confirms_everything(full_run):
    bad = [(r.id, r.status, r.computed) for r in full_run if r.status != "confirmed"]
    assert bad == []
    assert verify.exit_code(full_run) == 0


def test_report_matches_schema(full_run):
    schema = verify.load_schema()
    for timing in (False, True):
        doc = json.loads(json.dumps(verify.report_document(full_run, timing)))
        jsonschema.validate(doc, schema)


def test_schema_rejects_floats():
    schema = verify.load_schema()
    doc = {"claims": [{
        "id": "x", "location": "", "statement": "", "relation": "eq", "expected": 1.5,
        "computed": 1, "status": "confirmed", "certificate": "",
    }], "summary": {"confirmed": 1, "refuted": 0, "budget-exceeded": 0}}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, schema)


def test_relations():
    assert verify._relation_holds("ge", 6, 6)
    assert verify._relation_holds("le", 5, 6)
    assert not verify._relation_holds("ge", None, 6)
    with pytest.raises(ValueError):
        verify._relation_holds("ne", 1, 2)


def test_exit_codes():
    def rep(status):
        return verify.ClaimReport("a", "", "", "eq", 1, 1, status, "")
    assert verify.exit_code([rep("confirmed"), rep("budget-exceeded")]) == 0
    assert verify.exit_code([rep("budget-exceeded")], strict=True) == 2
    assert verify.exit_code([rep("refuted"), rep("budget-exceeded")], strict=True) == 3


def test_verify_paper_is_byte_identical(capsys):
    outs = []
    for _ in range(2):
        code = cli.main(["verify-paper", "--json"])
        outs.append(capsys.readouterr().out)
        assert code == 0
    assert outs[0] == outs[1]
    assert "runtime_ms" not in outs[0]
