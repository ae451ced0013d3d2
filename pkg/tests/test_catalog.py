import json
from dataclasses import replace
from fractions import Fraction as F
from importlib import resources

import pytest

from hbk import catalog as cat
from hbk.catalog import (
    Catalog,
    CatalogError,
    Expected,
    MissingSpec,
    Sourced,
    UnknownName,
    rational_entry,
)
from hbk.engine import AnnulusCensus, Count, HbkSpec
from hbk.grammar import format_spec
from hbk.tangle import validate_rational

# Symmetry groups (orientation-preserving, full) of the handlebody-knot
# tables, transcribed by hand.  The catalog has to agree with these.
SYMMETRY_TABLE = {
    "4_1": ("Z2", "Z2xZ2"),
    "5_1": ("Z1", "Z1"),
    "5_2": ("Z2xZ2", "Z2xZ2"),
    "6_1": ("Z1", "Z1"),
    "6_4": ("Z2", "Z2"),
    "6_10": ("Z2", "Z2"),
    "6_11": ("Z1", "Z1"),
    "6_12": ("Z2", "Z2"),
    "6_13": ("Z2", "Z2"),
    "7_36": ("Z2", "Z2"),
    "7_38": ("Z2", "Z2"),
    "7_39": ("Z2", "Z2"),
    "7_59": ("Z1", "Z1"),
    "7_60": ("Z1", "Z1"),
}


@pytest.fixture
def shipped():
    text = resources.files("hbk").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return text, Catalog.loads(text)


@pytest.fixture(autouse=True)
def no_override(monkeypatch):
    monkeypatch.delenv(cat.ENV_VAR, raising=False)


def test_symmetry_values_match_table(shipped):
    _, c = shipped
    for name, (pos, full) in SYMMETRY_TABLE.items():
        e = c.lookup(name).expected
        assert (e.symmetry_pos.value, e.symmetry_full.value) == (pos, full), name


@pytest.mark.parametrize("name, spec", [
    ("6_12", "k:0;rational:x:2/5"),
    ("5_2", "k:0;rational:x:1/3"),
    ("6_13", "k:0;rational:x:2/3"),
    ("7_39", "k:1;rational:x:2/5"),
    ("7_59", "k:0;composite:z:trefoil+:tau_7_59"),
    ("7_60", "k:1;composite:z:trefoil+:tau_7_59"),
])
def test_lookup_specs(name, spec):
    assert format_spec(cat.lookup(name).spec) == spec


def test_lookup_unknown():
    with pytest.raises(UnknownName) as info:
        cat.lookup("9_99")
    assert isinstance(info.value, KeyError)
    assert "9_99" in str(info.value)


def test_literature_only_entries_have_no_spec():
    assert cat.lookup("5_1").spec is None
    with pytest.raises(MissingSpec):
        cat.verify("5_1")


def test_roundtrip_is_byte_identical(shipped):
    text, c = shipped
    assert c.dumps() == text
    assert Catalog.loads(c.dumps()).dumps() == text


def results(report):
    return {r.field: r for r in report.results}


def test_verify_six_twelve():
    rep = cat.verify("6_12")
    r = results(rep)
    assert r["symmetry_pos"].status == "pass"
    assert r["chirality"].status == "pass"
    assert r["census"].status == "pass"
    assert r["inequivalent_to:7_39"].status == "pass"
    assert r["exterior_homeo_to:7_39"].status == "pass"
    assert rep.ok


def test_verify_seven_fifty_nine():
    r = results(cat.verify("7_59"))
    assert r["symmetry_pos"].status == "pass"
    assert r["symmetry_pos"].engine == "Z1"


def test_verify_five_two():
    r = results(cat.verify("5_2"))
    assert r["census"].status == "pass"
    assert r["symmetry_pos"].status == "skip"
    assert r["symmetry_pos"].expected == "Z2xZ2"


def test_every_field_carries_a_source(shipped):
    _, c = shipped
    for name in c.names():
        for item in c.lookup(name).expected.to_dict().values():
            assert item["source"]


def test_verify_all_clean():
    s = cat.verify_all()
    assert s.ok and s.failures == 0
    assert s.count("pass") > 0
    skipped = {r.name for r in s.reports if r.skipped}
    assert {"4_1", "5_1", "7_42"} <= skipped


def test_negative_control(shipped):
    _, c = shipped
    good = c.lookup("6_12")
    bad = replace(good, spec=HbkSpec(0, validate_rational("x", F(1, 5))))
    rep = c.with_entry(bad).verify("6_12")
    r = results(rep)
    assert r["census"].status == "fail"
    assert "two" in r["census"].engine.lower()
    assert not c.with_entry(bad).verify_all().ok


def test_added_entry_one_seventh(shipped):
    _, c = shipped
    census = AnnulusCensus(Count.TWO, (F(-1, 2), F(3, 2)))
    entry = rational_entry("v_1_7", 0, F(1, 7), census=Sourced(census, "slope formula, n=7"))
    c2 = c.with_entry(entry)
    assert results(c2.verify("v_1_7"))["census"].status == "pass"
    assert c2.verify_all().ok
    # the new entry survives serialization
    assert Catalog.loads(c2.dumps()).lookup("v_1_7") == entry


def test_env_override(tmp_path, monkeypatch, shipped):
    _, c = shipped
    entry = rational_entry(
        "only", 0, F(1, 5),
        census=Sourced(AnnulusCensus(Count.ONE, (F(-1, 2),)), "deliberately wrong"),
    )
    path = tmp_path / "cat.json"
    path.write_text(Catalog([entry]).dumps(), encoding="utf-8")
    monkeypatch.setenv(cat.ENV_VAR, str(path))
    assert cat.default_catalog().names() == ["only"]
    assert not cat.verify_all().ok


def test_schema_checks(shipped):
    text, _ = shipped
    doc = json.loads(text)
    doc["schema"] = "other/9"
    with pytest.raises(CatalogError):
        Catalog.loads(json.dumps(doc))
    with pytest.raises(CatalogError):
        Expected.from_dict({"chirality": {"value": "Chiral", "source": ""}})
    with pytest.raises(CatalogError):
        Expected.from_dict({"chirality": {"value": "Sideways", "source": "s"}})
    with pytest.raises(CatalogError):
        Expected.from_dict({"colour": {"value": 1, "source": "s"}})
    e = rational_entry("a", 0, F(1, 5))
    with pytest.raises(CatalogError):
        Catalog([e, e])
