import json

import pytest

from agraded.core import DEFAULT_PRIME, ParseError, PreconditionError
from agraded.io import is_prime, load_document, serialize_document


DOC = json.dumps({
    "prime": 101,
    "label": "A",
    "variables": ["x", "y"],
    "ideal": ["y^3  -   x^2"],
    "modules": {
        "M": {"generators": 2, "relations": [["y", "x"], ["x^2", "0"]]},
    },
    "ideal_I": ["x^2", "y"],
    "matrix_factorizations": {
        "F": {"phi": [["x", "y"], ["-y^2", "0"]]},
    },
    "omega": {"module": "M", "tau": 2},
})


def test_is_prime():
    assert [n for n in range(2, 40) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
    assert not is_prime(561)
    assert not is_prime(2047)
    assert is_prime(DEFAULT_PRIME)
    assert is_prime(2**61 - 1)


def test_load_document_fields():
    doc = load_document(DOC)
    assert doc.prime == 101
    assert doc.ring.label == "A"
    assert doc.ring.var_names == ("x", "y")
    assert sorted(doc.modules) == ["M"]
    assert doc.modules["M"].gens == 2
    assert len(doc.ideal_I) == 2
    assert sorted(doc.mfs) == ["F"]
    assert doc.omega_label == "M"
    assert doc.tau == 2


def test_serialize_canonicalizes():
    out = serialize_document(load_document(DOC))
    raw = json.loads(out)
    # symmetric residues and degree-lex term order
    assert raw["ideal"] == ["-x^2 + y^3"]
    # adjugate request comes back as an explicit matrix
    assert "adjugate" not in out
    psi = raw["matrix_factorizations"]["F"]["psi"]
    assert len(psi) == 2 and all(len(row) == 2 for row in psi)


def test_round_trip_fixed_point():
    once = serialize_document(load_document(DOC))
    twice = serialize_document(load_document(once))
    assert once == twice


def test_defaults():
    doc = load_document('{"variables": ["x"], "ideal": ["x^2"]}')
    assert doc.prime == DEFAULT_PRIME
    assert doc.ring.label == "A"
    assert doc.modules == {} and doc.mfs == {} and doc.ideal_I is None


def test_mf_only_document():
    text = json.dumps({"matrix_factorizations": {
        "F": {"variables": ["x", "y"], "phi": [["x", "y"], ["-y^2", "0"]]},
    }})
    doc = load_document(text)
    assert doc.ring is None
    assert list(doc.mfs) == ["F"]
    assert doc.mfs["F"].e == 3


def test_explicit_psi_round_trip():
    text = json.dumps({"matrix_factorizations": {
        "F": {"variables": ["x", "y"],
              "phi": [["x", "y"], ["-y^2", "0"]],
              "psi": [["0", "-y"], ["y^2", "x"]]},
    }})
    once = serialize_document(load_document(text))
    assert serialize_document(load_document(once)) == once


def bad(text, fragment):
    with pytest.raises(PreconditionError, match=fragment):
        load_document(text)


def test_rejections():
    bad("[1, 2]", "JSON object")
    bad("{not json", "not valid JSON")
    bad('{"colour": 1}', "unknown field")
    bad('{"prime": 10, "variables": ["x"]}', "not a prime")
    bad('{"prime": true, "variables": ["x"]}', "must be an integer")
    bad('{"ideal": ["x^2"]}', "requires 'variables'")
    bad('{"modules": {}}', "requires 'variables'")
    bad('{"variables": []}', "non-empty")
    bad('{"variables": ["x", "x"]}', "duplicates")
    bad('{"variables": ["x"], "modules": {"M": {"size": 1}}}', "unknown field")
    bad('{"variables": ["x"], "modules": {"M": {"generators": 0}}}', "positive integer")
    bad('{"variables": ["x"], "modules": {"M": {"generators": 2, "relations": [["x"]]}}}',
        "must hold 2")
    bad('{"variables": ["x"], "ideal_I": []}', "non-empty")
    bad('{"variables": ["x"], "ideal_I": ["1 + x"]}', "not in the maximal ideal")
    bad('{"matrix_factorizations": {"F": {"phi": [["x"]]}}}', "needs 'variables'")
    bad('{"matrix_factorizations": {"F": {"variables": ["x"], "phi": [["x", "x"]]}}}',
        "square matrix")
    bad(json.dumps({"matrix_factorizations": {"F": {
        "variables": ["x", "y"],
        "phi": [["x", "y"], ["-y^2", "0"]],
        "psi": [["0"]]}}}), "matching phi")
    bad('{"variables": ["x"], "ideal": ["x^2"], "omega": {"module": "Z"}}',
        "must name one of the document modules")
    bad(json.dumps({"variables": ["x"], "ideal": ["x^2"],
                    "modules": {"M": {"generators": 1}},
                    "omega": {"module": "M", "tau": 0}}), "positive integer")
    bad(json.dumps({"variables": ["x"], "ideal": ["x^2"],
                    "modules": {"M": {"generators": 1}},
                    "omega": {"module": "M", "note": "hi"}}), "unknown field")


def test_polynomial_parse_error_carries_position():
    text = '{"variables": ["x"], "ideal": ["x^2 + $"]}'
    with pytest.raises(ParseError) as exc:
        load_document(text)
    assert exc.value.col >= 1
