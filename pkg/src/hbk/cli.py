"""Command-line front end.

Exit codes: 0 ok; 1 parse or usage error; 2 invalid tangle (trivial or
disconnected); 3 ``equiv --strict`` got Unknown; 4 catalog verification
failed.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import catalog as catalog_mod
from . import engine
from .contfrac import (
    InfiniteValue,
    TwistWord,
    cf_eval,
    cf_expand,
    format_fraction,
    is_one_over_n,
    modz_normalize,
    parse_fraction,
)
from .grammar import ParseError, format_spec, parse_spec
from .tangle import Status, TangleError, endpoint_pairing, joins_disk_to_ends

SCHEMA_VERSION = 1

EXIT_OK, EXIT_PARSE, EXIT_TANGLE, EXIT_UNKNOWN, EXIT_VERIFY = 0, 1, 2, 3, 4

BATCH_MODES = {
    "equiv": engine.equivalent,
    "mirror": engine.equivalent_up_to_mirror,
    "exterior": engine.exterior_verdict,
}


class _Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, command: str, record: dict, text: str) -> None:
        if self.fmt == "json":
            doc = {"schema_version": SCHEMA_VERSION, "command": command, **record}
            self.stream.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


# -- commands ------------------------------------------------------------------

def cmd_eval(args, out: _Out) -> int:
    if args.fraction is not None:
        r = parse_fraction(args.fraction)
        word = cf_expand(r)
    else:
        word = TwistWord.parse(args.word or "")
        r = cf_eval(word)
    cls = modz_normalize(r)
    n = is_one_over_n(cls)
    valid = joins_disk_to_ends(endpoint_pairing(word))
    record = {
        "word": str(word),
        "layout": word.layout,
        "value": format_fraction(r),
        "class": str(cls),
        "one_over_n": n,
        "valid_tau_tangle": bool(valid and not cls.is_integral),
    }
    text = (
        f"word [{word}] ({word.layout} layout) = {format_fraction(r)}; "
        f"class {cls} mod Z"
        + (f"; 1/{n}-rational" if n is not None else "")
        + ("" if record["valid_tau_tangle"] else "; not a valid nontrivial tau-tangle")
    )
    out.emit("eval", {"input": record["word"], "result": record}, text)
    return EXIT_OK


def cmd_census(args, out: _Out) -> int:
    spec = parse_spec(args.spec)
    c = engine.census(spec)
    out.emit("census", {"input": format_spec(spec), "result": c.to_record()}, str(c))
    return EXIT_OK


def cmd_equiv(args, out: _Out) -> int:
    a, b = parse_spec(args.spec_a), parse_spec(args.spec_b)
    mode = "mirror" if args.mirror else "exterior" if args.exterior else "equiv"
    v = BATCH_MODES[mode](a, b)
    out.emit(
        "equiv",
        {"input": [format_spec(a), format_spec(b)], "mode": mode, "result": v.to_record()},
        str(v),
    )
    if args.strict and v.status is Status.UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_symmetry(args, out: _Out) -> int:
    spec = parse_spec(args.spec)
    g = engine.symmetry_group(spec)
    out.emit("symmetry", {"input": format_spec(spec), "result": g.value}, str(g))
    return EXIT_OK


def cmd_chirality(args, out: _Out) -> int:
    spec = parse_spec(args.spec)
    c = engine.chirality(spec)
    out.emit("chirality", {"input": format_spec(spec), "result": c.value}, str(c))
    return EXIT_OK


def _entry_text(e: catalog_mod.CatalogEntry) -> str:
    lines = [e.name]
    if e.spec is not None:
        try:
            lines.append(f"  spec: {format_spec(e.spec)}")
        except ValueError:
            lines.append(f"  spec: k:{e.spec.k}; {e.spec.tangle}")
    else:
        lines.append("  spec: none (literature only)")
    if e.figure_ref:
        lines.append(f"  figure: {e.figure_ref}")
    lines.append(f"  source: {e.source}")
    for name, item in e.expected.to_dict().items():
        lines.append(f"  {name}: {item['value']}  [{item['source']}]")
    return "\n".join(lines)


def _report_text(rep: catalog_mod.EntryReport) -> str:
    if rep.skipped:
        return f"{rep.name}: skipped ({rep.skipped})"
    lines = [f"{rep.name}: {'ok' if rep.ok else 'FAILED'}"]
    for r in rep.results:
        lines.append(f"  {r.status:4} {r.field}: engine {r.engine}, expected {r.expected}")
    return "\n".join(lines)


def cmd_catalog(args, out: _Out) -> int:
    cat = catalog_mod.default_catalog()
    if args.action == "list":
        names = cat.names()
        out.emit("catalog list", {"result": names}, "\n".join(names))
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise ParseError("catalog show needs a name", "", 0)
        e = cat.lookup(args.name)
        out.emit("catalog show", {"result": e.to_dict()}, _entry_text(e))
        return EXIT_OK
    # verify
    if args.all or not args.name:
        summary = cat.verify_all()
        text = "\n".join(_report_text(r) for r in summary.reports)
        text += (
            f"\n{summary.count('pass')} passed, {summary.failures} failed, "
            f"{summary.count('skip')} skipped"
        )
        out.emit("catalog verify", {"result": summary.to_record()}, text)
        return EXIT_OK if summary.ok else EXIT_VERIFY
    rep = cat.verify(args.name)
    out.emit("catalog verify", {"result": rep.to_record()}, _report_text(rep))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def _batch_row(i: int, row: dict) -> dict:
    record = {"row": i, "spec_a": row.get("spec_a"), "spec_b": row.get("spec_b")}
    mode = (row.get("mode") or "equiv").strip()
    record["mode"] = mode
    try:
        if mode not in BATCH_MODES:
            raise ParseError("mode must be equiv, mirror or exterior", mode, 0)
        if row.get("spec_a") is None or row.get("spec_b") is None:
            raise ParseError("row needs spec_a and spec_b", "", 0)
        a, b = parse_spec(row["spec_a"]), parse_spec(row["spec_b"])
        record.update(BATCH_MODES[mode](a, b).to_record())
    except (ValueError, ArithmeticError) as exc:
        record["error"] = {"type": type(exc).__name__, "message": str(exc)}
    return record


def cmd_batch(args, out: _Out) -> int:
    with open(args.pairs, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = {"spec_a", "spec_b", "mode"} - set(reader.fieldnames or ())
        if missing:
            raise ParseError(f"CSV header lacks {sorted(missing)}", ",".join(reader.fieldnames or ()), 0)
        rows = [_batch_row(i, row) for i, row in enumerate(reader, start=1)]
    doc = {"schema_version": SCHEMA_VERSION, "rows": rows}
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    errors = sum(1 for r in rows if "error" in r)
    out.emit(
        "batch",
        {"result": {"rows": len(rows), "errors": errors, "out": args.out}},
        f"{len(rows)} rows, {errors} errors; report written to {args.out}",
    )
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # --format is accepted before or after the subcommand
    p = argparse.ArgumentParser(
        prog="hbk", description="Decide equivalence, chirality and symmetry of V^k_tau."
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate a twist word")
    s.add_argument("word", nargs="?", default="",
                   help="comma-separated twist counts; put '--' before a word starting with '-'")
    s.add_argument("--fraction", help="expand p/q into its canonical twist word instead")
    s.set_defaults(func=cmd_eval)

    for name, func, help_ in (
        ("census", cmd_census, "essential annuli and their slopes"),
        ("symmetry", cmd_symmetry, "symmetry group"),
        ("chirality", cmd_chirality, "chirality verdict"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("spec", help="k:<int>;<tangle>")
        s.set_defaults(func=func)

    s = sub.add_parser("equiv", parents=[common], help="compare two specs")
    s.add_argument("spec_a")
    s.add_argument("spec_b")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--mirror", action="store_true", help="equivalence up to mirror image")
    g.add_argument("--exterior", action="store_true", help="exterior homeomorphism")
    s.add_argument("--strict", action="store_true", help=f"exit {EXIT_UNKNOWN} on Unknown")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("catalog", parents=[common], help="named handlebody-knots")
    s.add_argument("action", choices=("list", "show", "verify"))
    s.add_argument("name", nargs="?")
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("batch", parents=[common], help="evaluate pairs from a CSV file")
    s.add_argument("--pairs", required=True, help="CSV with header spec_a,spec_b,mode")
    s.add_argument("--out", required=True, help="path of the JSON report")
    s.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = _Out(args.format)
    try:
        return args.func(args, out)
    except TangleError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TANGLE
    except (ParseError, InfiniteValue, ValueError, KeyError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
