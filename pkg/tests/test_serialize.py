import json

import pytest

from arrlab import families as fam
from arrlab.exactfield import Field
from arrlab.graphs import Graph
from arrlab.nerve import complex_from_facets
from arrlab.serialize import FormatError, dumps, ideal_to_json, loads


@pytest.mark.parametrize("obj", [
    fam.two_rulings(2, 3, Field.finite(7)),
    fam.example_eight_lines(),
    fam.fermat_sub(3, [1, 4], Field.finite(7)),
    fam.two_rulings(2, 2, Field.finite(5, 2)),
    Graph.from_edges(3, [(0, 1)], ["a", "b", "c"]),
    complex_from_facets([[1, 2], [2, 3]]),
    fam.example_eight_ideal(),
], ids=lambda o: type(o).__name__)
def test_roundtrip(obj):
    text = dumps(obj)
    assert loads(text) == obj or dumps(loads(text)) == text
    assert dumps(loads(text)) == text


def test_output_is_deterministic():
    a = fam.fermat_geometric(3, Field.finite(7))
    assert dumps(a) == dumps(fam.fermat_geometric(3, Field.finite(7)))
    assert dumps(a).endswith("}\n")


@pytest.mark.parametrize("text", ["", "  ", "[1, 2]", "{bad json", '{"foo": 1}',
                                  '{"field": {"kind": "finite", "p": 7}, "n": 3, "lines": [[[1, 0, 0, 0]]]}',
                                  '{"field": {"kind": "finite", "p": 7}, "n": 3, "lines": [[[1,0,0,0],[2,0,0,0]]]}',
                                  '{"vcount": 2, "edges": [[0, 5]]}',
                                  '{"n": 2, "facets": [[1]]}'])
def test_malformed_documents(text):
    with pytest.raises(FormatError):
        loads(text)


def test_extension_field_ideals_have_no_text_form():
    f = Field.finite(5, 2)
    with pytest.raises(FormatError):
        ideal_to_json(fam.two_rulings_ci(1, f))


def test_arrangement_document_shape():
    doc = json.loads(dumps(fam.two_rulings(1, 1, Field.rational())))
    assert set(doc) == {"field", "n", "lines"}
    assert doc["lines"][0] == [["1", "0", "0", "0"], ["0", "0", "1", "0"]]
