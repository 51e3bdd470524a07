# pylint: disable=redefined-outer-name

"""
Tests the JSON documents present in PingPongUnits.document
"""


import json

import pytest

import PingPongUnits.document
import PingPongUnits.exceptions
import PingPongUnits.oracle
import PingPongUnits.pingpong
import PingPongUnits.recipe.table
import PingPongUnits.semigroup
import PingPongUnits.quaternion


CertificateDocument = PingPongUnits.document.CertificateDocument


@pytest.fixture
def w1_document():
    """
    The W1 certificate for d = 3 with a depth 3 oracle report.
    """
    certificate = PingPongUnits.pingpong.certify_pair(PingPongUnits.recipe.table.W1TableRecipe(3))
    w, u = (generator.unit for generator in certificate.generators)
    oracle = PingPongUnits.oracle.free_group_word_check(u, w, 3)

    return CertificateDocument.from_certificate(
        "certify group", {"d": 3, "w_kind": "w1"}, certificate, oracle, timing_ms=12
    )


def walk(value):
    yield value
    if isinstance(value, dict):
        for item in value.values():
            yield from walk(item)
    elif isinstance(value, list):
        for item in value:
            yield from walk(item)


def test_serialize_then_parse(w1_document):
    """
    Ensures that a serialized document parses back to an equal document.
    """
    text = w1_document.serialize()

    assert CertificateDocument.parse(text) == w1_document
    assert CertificateDocument.parse(text).serialize() == text


def test_serialized_layout(w1_document):
    """
    Ensures sorted keys, the schema version and exact strings for numbers.
    """
    text = w1_document.serialize()
    document = json.loads(text)

    assert text == json.dumps(document, sort_keys=True, indent=2)
    assert document["schema_version"] == PingPongUnits.document.SCHEMA_VERSION
    assert document["certificate"]["kind"] == "group"
    assert document["certificate"]["passed"] is True
    assert document["certificate"]["table"][0] == {
        "slot": 1,
        "sign": 1,
        "arcs": "[-sqrt(3), -1/4*sqrt(3)]",
    }
    assert document["certificate"]["conditions"][0]["verdict"] == "pass"
    assert document["oracle"]["counts"] == {"1": 4, "2": 12, "3": 36}
    assert not any(isinstance(value, float) for value in walk(document))


def test_failing_condition_carries_witness():
    """
    Ensures that failing conditions record their witness and boundary flag.
    """
    recipe = PingPongUnits.recipe.table.CorollaryTableRecipe(2, require_x_guard=False)
    certificate = PingPongUnits.pingpong.certify_pair(recipe)
    document = json.loads(
        CertificateDocument.from_certificate("certify group", {"d": 2}, certificate).serialize()
    )

    failed = [condition for condition in document["certificate"]["conditions"] if condition["verdict"] == "fail"]

    assert failed
    for condition in failed:
        assert isinstance(condition["witness"], str)
        assert isinstance(condition["boundary_only"], bool)


def test_semigroup_document():
    """
    Ensures the semigroup payload layout.
    """
    certificate = PingPongUnits.semigroup.certify_semigroup(2, PingPongUnits.quaternion.WKind.W1)
    document = json.loads(
        CertificateDocument.from_semigroup_certificate("certify semigroup", {"d": 2}, certificate).serialize()
    )

    assert document["certificate"]["kind"] == "semigroup"
    assert document["certificate"]["invariant_set"] == "]-1, 1["
    assert document["certificate"]["base_point"] == "1"
    assert document["oracle"] is None


def test_parse_rejects_bad_documents(w1_document):
    """
    Ensures that malformed JSON and schema violations raise InvalidDocument.
    """
    with pytest.raises(PingPongUnits.exceptions.InvalidDocument):
        CertificateDocument.parse("{not json")

    document = w1_document.to_dict()
    document["schema_version"] = 99
    with pytest.raises(PingPongUnits.exceptions.InvalidDocument):
        CertificateDocument.parse(json.dumps(document))

    document = w1_document.to_dict()
    document["timing_ms"] = 1.5
    with pytest.raises(PingPongUnits.exceptions.InvalidDocument):
        CertificateDocument.parse(json.dumps(document))

    document = w1_document.to_dict()
    del document["command"]
    with pytest.raises(PingPongUnits.exceptions.InvalidDocument):
        CertificateDocument.parse(json.dumps(document))


def test_serialize_rejects_floats():
    """
    Ensures that a float anywhere in the inputs is refused.
    """
    document = CertificateDocument("pell", {"d": 2.5})

    with pytest.raises(PingPongUnits.exceptions.InvalidDocument):
        document.serialize()


def test_number_and_arc_helpers():
    """
    Ensures the exact number and arc text helpers.
    """
    assert PingPongUnits.document.format_number(None) == "inf"
    assert PingPongUnits.document.parse_number("inf", 3).is_infinite()
    assert str(PingPongUnits.document.parse_number("1/2*sqrt(3)")) == "1/2*sqrt(3)"
    assert PingPongUnits.document.format_arc(PingPongUnits.document.parse_arc("]0, inf[", 3)) == "]0, inf["
    assert str(PingPongUnits.document.parse_arcset("[-1, 0] U [0, 1]")) == "[-1, 1]"
