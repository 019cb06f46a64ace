import json

import pytest
from hypothesis import given, settings, strategies as st

from hopf_forge.catalog import DEFAULT_INSTANCES, lookup, sweedler, taft
from hopf_forge.cli import item_document
from hopf_forge.io import (
    FORMAT, Document, DocumentBuilder, DocumentError, Realizer, check_structure, dumps, load,
    loads, pointer, save,
)
from hopf_forge.scalars import cyclotomic, parse_scalar, rational_functions, rationals
from hopf_forge.tensor import MultiMap, Space


def sweedler_doc():
    b = DocumentBuilder(rationals(), {"source": "test"})
    b.hopf("H", sweedler())
    return b.doc


@st.composite
def random_documents(draw):
    field = draw(st.sampled_from([rationals(), cyclotomic(3), rational_functions(rationals())]))
    gens = ["1", "-2/3", "7"]
    if field.kind == "cyclotomic":
        gens += ["z", "1 - z", "z^2/5"]
    if field.kind == "rational-functions":
        gens += ["q", "1/(q + 1)", "q^2 - 3"]
    V = Space("V", draw(st.integers(1, 3)), None)
    W = Space("W", draw(st.integers(1, 2)), None)
    doc = Document(field, {"V": V, "W": W})
    for k in range(draw(st.integers(1, 3))):
        dom = tuple(draw(st.lists(st.sampled_from([V, W]), max_size=2)))
        cod = tuple(draw(st.lists(st.sampled_from([V, W]), max_size=2)))
        from itertools import product
        keys = [(o, i) for o in product(*[range(s.dim) for s in cod]) for i in product(*[range(s.dim) for s in dom])]
        chosen = draw(st.lists(st.sampled_from(keys), unique=True, max_size=6))
        ent = {key: parse_scalar(draw(st.sampled_from(gens)), field) for key in chosen}
        doc.maps[f"f{k}"] = MultiMap(dom, cod, ent, field)
    return doc


@settings(max_examples=50, deadline=None)
@given(random_documents())
def test_serialization_round_trip(doc):
    text = dumps(doc)
    again = loads(text)
    assert dumps(again) == text
    assert again == doc
    for name, f in doc.maps.items():
        assert again.maps[name].entries == f.entries


def test_dumps_is_canonical_and_sorted():
    text = dumps(sweedler_doc())
    data = json.loads(text)
    assert data["format"] == FORMAT
    assert list(data) == sorted(data)
    rows = data["maps"]["H.mult"]["entries"]
    assert rows == sorted(rows)


def test_save_and_load(tmp_path):
    path = tmp_path / "h.json"
    text = save(sweedler_doc(), path)
    assert path.read_text() == text
    doc = load(path)
    assert check_structure(doc, "H").ok
    assert dumps(doc) == text


@pytest.mark.parametrize("name", DEFAULT_INSTANCES[:18])
def test_catalog_documents_round_trip_and_check(name):
    doc = item_document(lookup(name))
    text = dumps(doc)
    doc2 = loads(text)
    assert dumps(doc2) == text
    R = Realizer(doc2)
    for s in sorted(doc2.structures):
        assert check_structure(doc2, s, R).ok, s


def corrupt(text, edit):
    data = json.loads(text)
    edit(data)
    return json.dumps(data)


@pytest.mark.parametrize("edit, where", [
    (lambda d: d.update(format="other/1"), "/format"),
    (lambda d: d.update(field="Q(z3)"), "/field"),
    (lambda d: d["spaces"]["Sweedler"].update(dim=0), "/spaces/Sweedler/dim"),
    (lambda d: d["maps"]["H.mult"]["domain"].__setitem__(0, "nowhere"), "/maps/H.mult/domain/0"),
    (lambda d: d["maps"]["H.mult"]["entries"][0].__setitem__(0, [9]), "/maps/H.mult/entries/0/0"),
    (lambda d: d["maps"]["H.mult"]["entries"][0].__setitem__(2, "1+"), "/maps/H.mult/entries/0/2"),
    (lambda d: d["maps"]["H.mult"]["entries"].append(d["maps"]["H.mult"]["entries"][0]),
     "/maps/H.mult/entries/"),
    (lambda d: d["structures"]["H"].update(mult="missing"), "/structures/H/mult"),
    (lambda d: d["structures"]["H"].update(type="groupoid"), "/structures/H/type"),
    (lambda d: d["structures"]["H"].update(mult="H.comult"), "/structures/H"),
])
def test_errors_name_a_json_pointer(edit, where):
    text = corrupt(dumps(sweedler_doc()), edit)
    with pytest.raises(DocumentError) as err:
        loads(text)
    assert err.value.pointer.startswith(where)


def test_wrong_structure_constants_fail_the_check():
    data = json.loads(dumps(sweedler_doc()))
    data["maps"]["H.mult"]["entries"][0][2] = "2"
    doc = loads(json.dumps(data))
    rep = check_structure(doc, "H")
    assert not rep.ok
    assert any(r.witness for r in rep.failures())


def test_field_mismatch_in_builder():
    b = DocumentBuilder(rationals())
    with pytest.raises(DocumentError):
        b.hopf("T", taft(3))


def test_pointer_escaping():
    assert pointer("maps", "a/b", "x~y") == "/maps/a~1b/x~0y"
