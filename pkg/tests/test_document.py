import json

import pytest

from skewpbw import catalog
from skewpbw.document import (check_schema, document_from_presentation, dumps, load_file, loads,
                              presentation_from_document)
from skewpbw.errors import AxiomViolation, DefinitionError, InvalidTable, PresentationInconsistent
from skewpbw.rings import ModularRing


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_round_trip_is_byte_stable(name):
    p = catalog.load(name).presentation
    text = dumps(document_from_presentation(p))
    q = loads(text)
    assert dumps(document_from_presentation(q)) == text
    assert text.endswith("\n")
    # same multiplication on the generators
    for i in range(1, p.n + 1):
        for j in range(1, p.n + 1):
            assert str(p.var(i) * p.var(j)) == str(q.var(i) * q.var(j))


def quantum_doc():
    return {
        "ring": {"kind": "modular", "modulus": 3},
        "extension": {"n": 2, "c": [{"i": 1, "j": 2, "value": "2"}]},
        "name": "qp",
    }


def test_minimal_document_defaults():
    p = presentation_from_document(quantum_doc())
    assert p.order == "deglex"
    assert str(p.var(2) * p.var(1)) == "2*x1*x2"


def test_unknown_keys_are_rejected():
    doc = quantum_doc()
    doc["colour"] = "blue"
    with pytest.raises(DefinitionError):
        check_schema(doc)
    doc = quantum_doc()
    doc["extension"]["sigma"] = [{"builtin": "identity", "extra": 1}, {"builtin": "identity"}]
    with pytest.raises(DefinitionError):
        presentation_from_document(doc)


def test_table_maps_and_finite_tables(tmp_path):
    R = ModularRing(2)
    doc = {
        "ring": {"kind": "finite_table", "size": 2, "add": R.A.tolist(), "mul": R.M.tolist(), "neg": [0, 1]},
        "extension": {"n": 1, "sigma": [{"table": [0, 1]}], "delta": [{"table": [0, 0]}]},
        "order": "lex",
    }
    path = tmp_path / "z2.json"
    path.write_text(json.dumps(doc))
    p = load_file(path)
    assert p.order == "lex" and p.ring.size == 2


def test_out_of_range_table_is_rejected():
    doc = quantum_doc()
    doc["extension"]["sigma"] = [{"table": [0, 1, 7]}, {"builtin": "identity"}]
    with pytest.raises(InvalidTable):
        presentation_from_document(doc)


def test_non_multiplicative_sigma_is_rejected():
    doc = {"ring": {"kind": "modular", "modulus": 4}, "extension": {"n": 1, "sigma": [{"table": [0, 1, 0, 1]}]}}
    with pytest.raises(AxiomViolation):
        presentation_from_document(doc)


def test_zero_c_is_rejected():
    doc = quantum_doc()
    doc["extension"]["c"][0]["value"] = "0"
    with pytest.raises(PresentationInconsistent):
        presentation_from_document(doc)


def test_inner_derivation_round_trip():
    doc = {"ring": {"kind": "upper_triangular_2x2", "base": {"kind": "modular", "modulus": 2}},
           "extension": {"n": 1, "delta": [{"builtin": "inner", "element": "ut(0,1,0)"}]}}
    p = presentation_from_document(doc)
    out = document_from_presentation(p)
    assert out["extension"]["delta"] == [{"builtin": "inner", "element": "ut(0,1,0)"}]
    assert loads(dumps(out)) is not None


def test_garbage_text():
    with pytest.raises(DefinitionError):
        loads("{not json")
    with pytest.raises(DefinitionError):
        load_file("/nonexistent/definition.json")
