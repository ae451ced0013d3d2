"""Check every engine-decidable field of the shipped catalog."""
from fractions import Fraction

from hbk import default_catalog
from hbk.catalog import Sourced, rational_entry
from hbk.engine import AnnulusCensus, Count

cat = default_catalog()
summary = cat.verify_all()
for rep in summary.reports:
    if rep.skipped:
        print(f"{rep.name:5} skipped: {rep.skipped}")
        continue
    marks = " ".join(f"{r.field}={r.status}" for r in rep.results)
    print(f"{rep.name:5} {marks}")
print(f"{summary.count('pass')} passed, {summary.failures} failed, "
      f"{summary.count('skip')} skipped")

# Recording a wrong value is caught: 1/7 has two annuli, not one.
wrong = rational_entry(
    "wrong", 0, Fraction(1, 7),
    census=Sourced(AnnulusCensus(Count.ONE, (Fraction(-1, 2),)), "made up"),
)
for r in cat.with_entry(wrong).verify("wrong").results:
    print(r.field, r.status, "engine:", r.engine, "recorded:", r.expected)
