"""Deciders for the handlebody-knots ``V^k_tau``.

``V^k_tau`` is the genus-two handlebody-knot obtained from the handcuff
graph 4_1, twisted ``k`` times along the disk bounded by one of its loops,
by replacing the trivial tau-tangle at a trivalent vertex with ``tau``.
``k = 0`` is the untwisted family ``V_tau``.

Everything here is exact: slopes are Fractions, verdicts are three-valued,
and no rule claims more than the classification results support.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .tangle import (
    CompositeTau,
    RationalTau,
    Status,
    TauTangle,
    Verdict,
    is_atoroidal,
    mirror,
    one_over_n,
    star,
    tangle_equiv,
)

__all__ = [
    "HbkSpec",
    "Count",
    "AnnulusCensus",
    "SymmetryGroup",
    "Chirality",
    "EngineError",
    "MissingFraction",
    "ToroidalTangle",
    "census",
    "annulus_slopes",
    "equivalent",
    "mirror_spec",
    "equivalent_up_to_mirror",
    "chirality",
    "symmetry_group",
    "exterior_homeomorphic",
    "exterior_verdict",
    "is_irreducible",
    "verdict_or",
]

HALF = Fraction(1, 2)

# short names for the results the verdicts rest on
ANNULI = "annulus classification"
SLOPES = "annulus slope formula"
REPLACEMENT = "tangle replacement equivalence"
RIGIDITY = "rigidity for non-1/n tangles"
SYMMETRY = "chirality and symmetry of non-1/n tangles"
TWISTED = "twisted family extension"
EXTERIOR = "twisting preserves the exterior"


class EngineError(ValueError):
    pass


class MissingFraction(EngineError):
    """A rational tangle has no recorded fraction and the answer depends on it."""


class ToroidalTangle(EngineError):
    """The tangle is declared toroidal; none of the deciders apply."""


@dataclass(frozen=True)
class HbkSpec:
    k: int
    tangle: TauTangle

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise TypeError(f"twist count must be an int, got {self.k!r}")


def _check(spec: HbkSpec) -> None:
    if not is_atoroidal(spec.tangle):
        raise ToroidalTangle(f"tangle {spec.tangle} is not atoroidal")


class Count(str, enum.Enum):
    INFINITELY_MANY = "infinitely_many"
    TWO = "two"
    ONE = "one"

    def __str__(self):
        return {"infinitely_many": "InfinitelyMany", "two": "Two", "one": "One"}[self.value]


@dataclass(frozen=True)
class AnnulusCensus:
    count: Count
    slopes: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(sorted(Fraction(s) for s in self.slopes)))
        expected = {Count.INFINITELY_MANY: 0, Count.TWO: 2, Count.ONE: 1}[self.count]
        if len(self.slopes) != expected:
            raise ValueError(f"{self.count} census needs {expected} slopes")

    def __str__(self):
        if not self.slopes:
            return str(self.count)
        return f"{self.count}; slopes: " + ", ".join(str(s) for s in self.slopes)

    def to_record(self) -> dict:
        return {"count": self.count.value, "slopes": [str(s) for s in self.slopes]}


class SymmetryGroup(str, enum.Enum):
    Z1 = "Z1"
    Z2 = "Z2"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Chirality(str, enum.Enum):
    CHIRAL = "Chiral"
    AMPHICHIRAL = "Amphichiral"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


def annulus_slopes(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Slopes of the two essential annuli of ``V^k_tau``, tau 1/n-rational.

    One is the frontier of the twisted Moebius band, ``k - 1/2``; the
    other is ``4k + (n - 4)/2``.
    """
    return (k - HALF, 4 * k + Fraction(n - 4, 2))


def census(spec: HbkSpec) -> AnnulusCensus:
    """Essential annuli of the exterior of ``V^k_tau``, up to isotopy."""
    _check(spec)
    t = spec.tangle
    mobius = spec.k - HALF
    if isinstance(t, RationalTau) and t.fraction is None and not t.not_one_over_n:
        raise MissingFraction(f"no fraction recorded for rational tangle {t.label!r}")
    n = one_over_n(t)
    if n is None:
        return AnnulusCensus(Count.ONE, (mobius,))
    if abs(n) == 3:
        return AnnulusCensus(Count.INFINITELY_MANY)
    return AnnulusCensus(Count.TWO, annulus_slopes(spec.k, n))


def verdict_or(first: Verdict, second: Verdict) -> Verdict:
    """Three-valued OR: Equivalent wins, two Inequivalents give Inequivalent."""
    if first.status is Status.EQUIVALENT:
        return first
    if second.status is Status.EQUIVALENT:
        return second
    if first.status is Status.INEQUIVALENT and second.status is Status.INEQUIVALENT:
        reason = first.reason
        if second.reason != first.reason:
            reason = f"{reason}; {second.reason}"
        return Verdict(
            Status.INEQUIVALENT,
            reason,
            _merge(first.citations, second.citations),
        )
    unknown = first if first.status is Status.UNKNOWN else second
    return Verdict(Status.UNKNOWN, unknown.reason, _merge(first.citations, second.citations))


def _merge(*groups) -> tuple[str, ...]:
    out: list[str] = []
    for g in groups:
        out.extend(c for c in g if c not in out)
    return tuple(out)


def _tangle_or_star(a: TauTangle, b: TauTangle) -> Verdict:
    direct = tangle_equiv(a, b)
    swapped = tangle_equiv(a, star(b))
    v = verdict_or(direct, swapped)
    if v is swapped and v.status is Status.EQUIVALENT:
        v = Verdict(v.status, f"after the star move: {v.reason}", v.citations)
    return v


def _census_differs(ca: AnnulusCensus, cb: AnnulusCensus) -> str | None:
    if ca.count is not cb.count:
        return f"annulus counts differ ({ca.count} vs {cb.count})"
    if ca.count is not Count.INFINITELY_MANY and Counter(ca.slopes) != Counter(cb.slopes):
        sa = ", ".join(map(str, ca.slopes))
        sb = ", ".join(map(str, cb.slopes))
        return f"slope multisets differ ({sa} vs {sb})"
    return None


def equivalent(a: HbkSpec, b: HbkSpec) -> Verdict:
    """Are ``V^{k_a}_alpha`` and ``V^{k_b}_beta`` equivalent (orientation-preserving)?

    Equal twist counts reduce to comparing ``alpha`` with ``beta`` and with
    ``beta*``.  Different twist counts are only ever separated by the
    annulus census; otherwise the answer is Unknown.
    """
    _check(a)
    _check(b)
    if a.k == b.k:
        v = _tangle_or_star(a.tangle, b.tangle)
        basis = [REPLACEMENT]
        if _not_one_over_n(a.tangle) and _not_one_over_n(b.tangle):
            basis.append(RIGIDITY)
        else:
            basis += [ANNULI, SLOPES]
        if a.k:
            basis.append(TWISTED)
        return Verdict(v.status, v.reason, _merge(v.citations, basis))
    ca, cb = census(a), census(b)
    diff = _census_differs(ca, cb)
    if diff is not None:
        return Verdict(Status.INEQUIVALENT, diff, (ANNULI, SLOPES, TWISTED))
    return Verdict(
        Status.UNKNOWN,
        f"twist counts differ ({a.k} vs {b.k}) and the annulus census agrees; "
        "the equivalence criterion holds only at fixed twist count",
        (ANNULI, TWISTED),
    )


def mirror_spec(spec: HbkSpec) -> HbkSpec:
    """Mirror image of ``V^k_tau``, which is ``V^{1-k}`` of the mirror tangle."""
    return HbkSpec(1 - spec.k, mirror(spec.tangle))


def equivalent_up_to_mirror(a: HbkSpec, b: HbkSpec) -> Verdict:
    direct = equivalent(a, b)
    mirrored = equivalent(a, mirror_spec(b))
    v = verdict_or(direct, mirrored)
    if v.status is Status.INEQUIVALENT:
        return Verdict(
            v.status,
            f"as given: {direct.reason}; against the mirror: {mirrored.reason}",
            v.citations,
        )
    if v is mirrored and v.status is Status.EQUIVALENT:
        return Verdict(v.status, f"with the mirror image: {v.reason}", v.citations)
    return v


def _not_one_over_n(t: TauTangle) -> bool:
    """Known not to be 1/n-rational."""
    if isinstance(t, CompositeTau):
        return True
    if t.fraction is None:
        return t.not_one_over_n
    return one_over_n(t) is None


def chirality(spec: HbkSpec) -> Chirality:
    """Chiral, or Unknown; Amphichiral is never certified."""
    _check(spec)
    t = spec.tangle
    if _not_one_over_n(t):
        return Chirality.CHIRAL
    own = census(spec)
    if own.count is Count.INFINITELY_MANY:
        return Chirality.UNKNOWN
    if _census_differs(own, census(mirror_spec(spec))) is not None:
        return Chirality.CHIRAL
    return Chirality.UNKNOWN


def symmetry_group(spec: HbkSpec) -> SymmetryGroup:
    """The symmetry group when the tangle is not 1/n-rational.

    It is the group of self-homeomorphisms of the tangle fixing x, which is
    Z2 exactly when ``tau`` and ``tau*`` are equivalent.
    """
    _check(spec)
    t = spec.tangle
    if not _not_one_over_n(t):
        return SymmetryGroup.UNKNOWN
    v = tangle_equiv(t, star(t))
    if v.status is Status.EQUIVALENT:
        return SymmetryGroup.Z2
    if v.status is Status.INEQUIVALENT:
        return SymmetryGroup.Z1
    return SymmetryGroup.UNKNOWN


def exterior_homeomorphic(a: HbkSpec, b: HbkSpec) -> bool | None:
    """True when the exteriors are known to be homeomorphic, else None.

    Twisting along the disk does not change the exterior, so equivalent
    tangles give homeomorphic exteriors for any pair of twist counts.
    """
    _check(a)
    _check(b)
    v = _tangle_or_star(a.tangle, b.tangle)
    return True if v.status is Status.EQUIVALENT else None


def exterior_verdict(a: HbkSpec, b: HbkSpec) -> Verdict:
    """:func:`exterior_homeomorphic` as a verdict record."""
    if exterior_homeomorphic(a, b):
        v = _tangle_or_star(a.tangle, b.tangle)
        return Verdict(Status.EQUIVALENT, f"exteriors homeomorphic: {v.reason}", (EXTERIOR,))
    return Verdict(Status.UNKNOWN, "no tool separates exteriors", (EXTERIOR,))


def is_irreducible(spec: HbkSpec) -> bool:
    """Irreducible iff the (atoroidal) tangle is nontrivial.

    Trivial tangles cannot be built, so this is True for every spec that
    passes validation.
    """
    _check(spec)
    t = spec.tangle
    if isinstance(t, RationalTau) and t.fraction is not None:
        return not t.fraction.is_integral
    return True

