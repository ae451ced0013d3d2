"""Mirror and star on rational and composite tau-tangles."""
from fractions import Fraction

from hbk import mirror, star, tangle_equiv, validate_rational
from hbk.grammar import format_tangle, parse_tangle

alpha = validate_rational("x", Fraction(2, 5))
print("alpha        ", format_tangle(alpha))
print("mirror alpha ", format_tangle(mirror(alpha)))
print("star alpha   ", format_tangle(star(alpha)), "(star fixes x, so nothing moves)")
print("alpha vs its mirror:", tangle_equiv(alpha, mirror(alpha)))

# Off x, star exchanges the vertex.
beta = validate_rational("y", Fraction(1, 3))
print(format_tangle(beta), "->", format_tangle(star(beta)))

# A composite tangle rational at z with a trefoil inside it.
gamma = parse_tangle("composite:z:trefoil+:tau_7_59")
for t in (gamma, mirror(gamma), star(gamma), star(mirror(gamma))):
    print(f"{format_tangle(t):40} vs gamma: {tangle_equiv(gamma, t).status}")
