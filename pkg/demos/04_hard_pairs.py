"""Pairs with homeomorphic exteriors that are still inequivalent."""
from hbk import (
    chirality,
    equivalent,
    equivalent_up_to_mirror,
    exterior_verdict,
    lookup,
    mirror_spec,
    symmetry_group,
)
from hbk.grammar import format_spec

for a, b in (("6_12", "7_39"), ("7_59", "7_60"), ("5_2", "6_13")):
    sa, sb = lookup(a).spec, lookup(b).spec
    print(f"{a} = {format_spec(sa)}")
    print(f"{b} = {format_spec(sb)}")
    print("  equivalent:      ", equivalent(sa, sb))
    print("  up to mirror:    ", equivalent_up_to_mirror(sa, sb))
    print("  exteriors:       ", exterior_verdict(sa, sb))
    print()

s = lookup("6_12").spec
print("mirror of 6_12 is", format_spec(mirror_spec(s)))
print("6_12:", chirality(s), symmetry_group(s))
s = lookup("7_59").spec
print("7_59:", chirality(s), symmetry_group(s))
