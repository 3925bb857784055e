import pytest

from skewpbw import catalog
from skewpbw.errors import SkewPBWError, UnknownEntry
from skewpbw.properties import decide

ENTRIES = ["z2-trivial", "z4-trivial", "z6-trivial", "z2xz2-swap", "ut2z2-trivial", "quantum-plane-z3",
           "weyl-z5", "diff-poly-z5", "matrix-zq-half", "z2poly-eval0"]


def test_ten_entries():
    assert catalog.names() == ENTRIES
    assert catalog.list_entries() == ENTRIES


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.load("z7-nothing")


def test_entries_are_cached():
    assert catalog.load("weyl-z5") is catalog.load("weyl-z5")


ROWS = [(name, prop) for name in ENTRIES for prop in catalog.expected_table(name)]


@pytest.mark.parametrize("name,prop", ROWS, ids=[f"{n}:{p}" for n, p in ROWS])
def test_expected_table_row(name, prop):
    exp = catalog.expected_table(name)[prop]
    assert exp.provenance in ("source", "derived", "trivial")
    v = decide(catalog.load(name).presentation, prop, 2)
    assert v.label() == exp.status


def test_build_is_fresh():
    assert catalog.build("weyl-z5").presentation is not catalog.load("weyl-z5").presentation
    with pytest.raises(UnknownEntry):
        catalog.build("nope")
