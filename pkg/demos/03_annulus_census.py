"""Essential annuli of V^k_tau as the fraction and twist count vary."""
from fractions import Fraction

from hbk import HbkSpec, census, validate_rational

print(f"{'tau':>6} " + " ".join(f"{'k=' + str(k):>22}" for k in range(-1, 3)))
for r in (Fraction(1, 3), Fraction(2, 3), Fraction(1, 5), Fraction(4, 5),
          Fraction(2, 5), Fraction(1, 7), Fraction(3, 7), Fraction(1, 9)):
    tau = validate_rational("x", r)
    cells = [str(census(HbkSpec(k, tau))) for k in range(-1, 3)]
    print(f"{str(r):>6} " + " ".join(f"{c:>22}" for c in cells))

# Slopes are invariants of the pair, so two specs with different slope
# multisets are never equivalent.  The Moebius-band slope k - 1/2 always
# appears; the second slope only exists for 1/n with |n| > 3.
