"""Named handlebody-knots and their recorded invariants.

The catalog is a JSON document (``data/catalog.json``; override with the
``HBK_CATALOG`` environment variable).  Entries in the ``V^k_tau`` family
carry a spec and are checked against the engine by :func:`verify`; rows
known only from the literature carry just their recorded values and are
never counted as engine failures.  See ``docs/catalog.md`` for the schema.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from . import engine
from .contfrac import format_fraction, modz_normalize, parse_fraction
from .engine import AnnulusCensus, Count, HbkSpec
from .tangle import (
    CompositeTau,
    KnotLabel,
    RationalTau,
    Status,
    TauTangle,
    Vertex,
    validate_rational,
)

__all__ = [
    "SCHEMA",
    "CatalogError",
    "UnknownName",
    "MissingSpec",
    "Expected",
    "CatalogEntry",
    "Catalog",
    "FieldResult",
    "EntryReport",
    "Summary",
    "default_catalog",
    "lookup",
    "verify",
    "verify_all",
]

SCHEMA = "hbk-catalog/1"
ENV_VAR = "HBK_CATALOG"

GROUPS = ("Z1", "Z2", "Z2xZ2")
CHIRALITIES = ("Chiral", "Amphichiral")


class CatalogError(ValueError):
    pass


class UnknownName(CatalogError, KeyError):
    def __str__(self):
        return f"no catalog entry named {self.args[0]!r}"


class MissingSpec(CatalogError):
    pass


# -- (de)serialization of specs ------------------------------------------------

def tangle_to_dict(t: TauTangle) -> dict:
    if isinstance(t, RationalTau):
        d: dict[str, Any] = {"kind": "rational", "vertex": t.vertex.value}
        if t.fraction is None:
            d.update(fraction=None, label=t.label, not_one_over_n=t.not_one_over_n)
            if t.mirrored:
                d["mirrored"] = True
        else:
            d["fraction"] = format_fraction(t.fraction.rep)
        return d
    d = {
        "kind": "composite",
        "rational_vertex": t.rational_vertex.value if t.rational_vertex else None,
        "knots": [str(k) for k in t.knots],
        "atoroidal": t.atoroidal,
        "descriptor": t.descriptor,
    }
    if t.mirrored:
        d["mirrored"] = True
    if t.starred:
        d["starred"] = True
    return d


def tangle_from_dict(d: dict) -> TauTangle:
    kind = d.get("kind")
    if kind == "rational":
        v = Vertex(d["vertex"])
        if d.get("fraction") is None:
            return RationalTau(
                v, None, label=d["label"],
                not_one_over_n=bool(d.get("not_one_over_n", False)),
                mirrored=bool(d.get("mirrored", False)),
            )
        return RationalTau(v, modz_normalize(parse_fraction(d["fraction"])))
    if kind == "composite":
        rv = d.get("rational_vertex")
        return CompositeTau(
            Vertex(rv) if rv else None,
            tuple(KnotLabel.parse(k) for k in d["knots"]),
            bool(d.get("atoroidal", True)),
            d["descriptor"],
            mirrored=bool(d.get("mirrored", False)),
            starred=bool(d.get("starred", False)),
        )
    raise CatalogError(f"unknown tangle kind {kind!r}")


def census_to_dict(c: AnnulusCensus) -> dict:
    return c.to_record()


def census_from_dict(d: dict) -> AnnulusCensus:
    return AnnulusCensus(Count(d["count"]), tuple(parse_fraction(s) for s in d["slopes"]))


# -- entries -----------------------------------------------------------------

@dataclass(frozen=True)
class Sourced:
    value: Any
    source: str


_EXPECTED_FIELDS = (
    "symmetry_pos",
    "symmetry_full",
    "chirality",
    "census",
    "inequivalent_to",
    "inequivalent_up_to_mirror_to",
    "exterior_homeo_to",
)


@dataclass(frozen=True)
class Expected:
    """Recorded values; every present field has a source."""

    symmetry_pos: Optional[Sourced] = None
    symmetry_full: Optional[Sourced] = None
    chirality: Optional[Sourced] = None
    census: Optional[Sourced] = None
    inequivalent_to: Optional[Sourced] = None
    inequivalent_up_to_mirror_to: Optional[Sourced] = None
    exterior_homeo_to: Optional[Sourced] = None

    @classmethod
    def from_dict(cls, d: dict) -> "Expected":
        unknown = set(d) - set(_EXPECTED_FIELDS)
        if unknown:
            raise CatalogError(f"unknown expected fields {sorted(unknown)}")
        kw = {}
        for name, item in d.items():
            if not item.get("source"):
                raise CatalogError(f"expected field {name!r} has no source")
            value = item["value"]
            if name in ("symmetry_pos", "symmetry_full") and value not in GROUPS:
                raise CatalogError(f"bad group {value!r}")
            if name == "chirality" and value not in CHIRALITIES:
                raise CatalogError(f"bad chirality {value!r}")
            if name == "census":
                value = census_from_dict(value)
            if name.endswith("_to"):
                value = tuple(value)
            kw[name] = Sourced(value, item["source"])
        return cls(**kw)

    def to_dict(self) -> dict:
        out = {}
        for name in _EXPECTED_FIELDS:
            item = getattr(self, name)
            if item is None:
                continue
            value = item.value
            if name == "census":
                value = census_to_dict(value)
            elif name.endswith("_to"):
                value = list(value)
            out[name] = {"source": item.source, "value": value}
        return out


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: Optional[HbkSpec]
    figure_ref: str
    expected: Expected
    source: str

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogEntry":
        spec = None
        if d.get("spec") is not None:
            s = d["spec"]
            spec = HbkSpec(int(s["k"]), tangle_from_dict(s["tangle"]))
        return cls(
            d["name"], spec, d.get("figure", ""),
            Expected.from_dict(d.get("expected", {})), d["source"],
        )

    def to_dict(self) -> dict:
        spec = None
        if self.spec is not None:
            spec = {"k": self.spec.k, "tangle": tangle_to_dict(self.spec.tangle)}
        return {
            "name": self.name,
            "figure": self.figure_ref,
            "source": self.source,
            "spec": spec,
            "expected": self.expected.to_dict(),
        }


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class FieldResult:
    field: str
    status: str          # "pass", "fail" or "skip"
    engine: str
    expected: str
    source: str
    note: str = ""

    def to_record(self) -> dict:
        return {
            "field": self.field, "status": self.status, "engine": self.engine,
            "expected": self.expected, "source": self.source, "note": self.note,
        }


@dataclass
class EntryReport:
    name: str
    results: list[FieldResult] = field(default_factory=list)
    skipped: str = ""

    @property
    def failures(self) -> list[FieldResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "skipped": self.skipped,
            "results": [r.to_record() for r in self.results],
        }


@dataclass
class Summary:
    reports: list[EntryReport]

    def count(self, status: str) -> int:
        return sum(1 for rep in self.reports for r in rep.results if r.status == status)

    @property
    def failures(self) -> int:
        return self.count("fail")

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_record(self) -> dict:
        return {
            "passed": self.count("pass"),
            "failed": self.failures,
            "skipped": self.count("skip"),
            "entries": [r.to_record() for r in self.reports],
        }


# -- the catalog ----------------------------------------------------------------

class Catalog:
    def __init__(self, entries, schema: str = SCHEMA):
        if schema != SCHEMA:
            raise CatalogError(f"unsupported catalog schema {schema!r}")
        self.schema = schema
        self.entries: dict[str, CatalogEntry] = {}
        for e in entries:
            if e.name in self.entries:
                raise CatalogError(f"duplicate entry {e.name!r}")
            self.entries[e.name] = e

    @classmethod
    def loads(cls, text: str) -> "Catalog":
        doc = json.loads(text)
        return cls([CatalogEntry.from_dict(d) for d in doc["entries"]], doc.get("schema", ""))

    @classmethod
    def load(cls, path) -> "Catalog":
        return cls.loads(Path(path).read_text(encoding="utf-8"))

    def dumps(self) -> str:
        doc = {"schema": self.schema, "entries": [e.to_dict() for e in self.entries.values()]}
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def names(self) -> list[str]:
        return list(self.entries)

    def lookup(self, name: str) -> CatalogEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise UnknownName(name) from None

    def with_entry(self, entry: CatalogEntry) -> "Catalog":
        """A copy with ``entry`` added or replaced."""
        entries = dict(self.entries)
        entries[entry.name] = entry
        return Catalog(entries.values(), self.schema)

    # verification

    def verify(self, name: str) -> EntryReport:
        entry = self.lookup(name)
        if entry.spec is None:
            raise MissingSpec(f"entry {name!r} has no spec; literature values only")
        spec = entry.spec
        exp = entry.expected
        report = EntryReport(name)
        add = report.results.append

        if exp.census is not None:
            try:
                got = engine.census(spec)
            except engine.MissingFraction as e:
                add(FieldResult("census", "skip", "n/a", str(exp.census.value),
                                exp.census.source, str(e)))
            else:
                add(_compare("census", got, exp.census))

        if exp.chirality is not None:
            got = engine.chirality(spec)
            if got is engine.Chirality.UNKNOWN:
                add(FieldResult("chirality", "skip", str(got), exp.chirality.value,
                                exp.chirality.source, "engine does not decide; literature value"))
            else:
                add(_compare("chirality", got.value, exp.chirality))

        for fname in ("symmetry_pos", "symmetry_full"):
            item = getattr(exp, fname)
            if item is None:
                continue
            got = engine.symmetry_group(spec)
            if got is engine.SymmetryGroup.UNKNOWN:
                add(FieldResult(fname, "skip", str(got), item.value, item.source,
                                "outside the engine's rules; literature value"))
            else:
                add(_compare(fname, got.value, item))

        pair_checks = (
            ("inequivalent_to", engine.equivalent, Status.INEQUIVALENT),
            ("inequivalent_up_to_mirror_to", engine.equivalent_up_to_mirror, Status.INEQUIVALENT),
            ("exterior_homeo_to", engine.exterior_verdict, Status.EQUIVALENT),
        )
        for fname, decide, want in pair_checks:
            item = getattr(exp, fname)
            if item is None:
                continue
            for other_name in item.value:
                other = self.lookup(other_name)
                label = f"{fname}:{other_name}"
                if other.spec is None:
                    add(FieldResult(label, "skip", "n/a", want.value, item.source,
                                    f"{other_name} has no spec"))
                    continue
                v = decide(spec, other.spec)
                status = "pass" if v.status is want else "fail"
                add(FieldResult(label, status, v.status.value, want.value, item.source, v.reason))
        return report

    def verify_all(self) -> Summary:
        reports = []
        for name, entry in self.entries.items():
            if entry.spec is None:
                reports.append(EntryReport(name, skipped="literature-only entry"))
            else:
                reports.append(self.verify(name))
        return Summary(reports)


def _compare(fname: str, got, item: Sourced) -> FieldResult:
    status = "pass" if got == item.value else "fail"
    return FieldResult(fname, status, str(got), str(item.value), item.source)


def default_catalog() -> Catalog:
    path = os.environ.get(ENV_VAR)
    if path:
        return Catalog.load(path)
    text = resources.files("hbk").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return Catalog.loads(text)


def lookup(name: str) -> CatalogEntry:
    return default_catalog().lookup(name)


def verify(name: str) -> EntryReport:
    return default_catalog().verify(name)


def verify_all() -> Summary:
    return default_catalog().verify_all()


def rational_entry(name: str, k: int, r: Fraction, **expected) -> CatalogEntry:
    """Convenience constructor for ad-hoc entries rational at x."""
    return CatalogEntry(
        name, HbkSpec(k, validate_rational(Vertex.X, r)), "", Expected(**expected), "ad hoc"
    )
