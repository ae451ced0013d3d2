"""Symbolic tau-tangles.

A tau-tangle is a cone on three boundary points ``x, y, z`` in a ball, with
``x`` the point on the connecting arc of the handcuff graph.  The engine
only sees tangles through two symbolic classes:

* :class:`RationalTau` -- rational at a vertex ``s``, with the fraction of
  its 2-string part known modulo Z (or, for catalog entries, only known
  not to be of the form 1/n);
* :class:`CompositeTau` -- anything else, described by its rational vertex
  (if any), its constituent knots and an opaque presentation id.

Equivalence is three-valued.  For rational tangles the class of the
fraction in Q/Z is treated as a complete invariant; this is an adopted
assumption and every verdict that depends on it says so.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .contfrac import (
    ModZClass,
    TwistWord,
    WordLike,
    is_one_over_n,
    modz_normalize,
)

__all__ = [
    "Vertex",
    "KnotLabel",
    "RationalTau",
    "CompositeTau",
    "TauTangle",
    "Status",
    "Verdict",
    "TangleError",
    "TrivialTangle",
    "InvalidConnectivity",
    "validate_rational",
    "endpoint_pairing",
    "endpoint_pairing_batch",
    "joins_disk_to_ends",
    "mirror",
    "star",
    "tangle_equiv",
    "is_atoroidal",
    "one_over_n",
    "COMPLETENESS_ASSUMPTION",
]


class TangleError(ValueError):
    pass


class TrivialTangle(TangleError):
    """The fraction is an integer, so the tangle lies in a proper disk."""


class InvalidConnectivity(TangleError):
    """The 2-string part joins the two disk points, so the cone would close up."""


class Vertex(str, enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"

    def swapped(self) -> "Vertex":
        """Image under the star move: x fixed, y and z exchanged."""
        return {Vertex.X: Vertex.X, Vertex.Y: Vertex.Z, Vertex.Z: Vertex.Y}[self]

    def __str__(self):
        return self.value


_KNOT_RE = re.compile(r"^([A-Za-z0-9_.]+)([+\-=])$")


@dataclass(frozen=True, order=True)
class KnotLabel:
    """A constituent knot with its handedness.

    ``chirality`` is ``"+"`` or ``"-"`` for the two mirror forms of a
    chiral knot and ``"="`` for an amphichiral one.
    """

    name: str
    chirality: str

    def __post_init__(self):
        if self.chirality not in ("+", "-", "="):
            raise ValueError(f"bad chirality marker {self.chirality!r}")
        if not re.fullmatch(r"[A-Za-z0-9_.]+", self.name):
            raise ValueError(f"bad knot name {self.name!r}")

    @property
    def amphichiral(self) -> bool:
        return self.chirality == "="

    @property
    def mirror_partner(self) -> "KnotLabel":
        flip = {"+": "-", "-": "+", "=": "="}
        return KnotLabel(self.name, flip[self.chirality])

    def __str__(self):
        return f"{self.name}{self.chirality}"

    @classmethod
    def parse(cls, text: str) -> "KnotLabel":
        m = _KNOT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"knot label must look like 'trefoil+', got {text!r}")
        return cls(m.group(1), m.group(2))


@dataclass(frozen=True)
class RationalTau:
    """A tau-tangle rational at ``vertex``.

    ``fraction`` is the class in Q/Z of its 2-string part.  It may be left
    as None for tangles known only to be rational and not 1/n-rational;
    such a tangle must then carry a ``label`` naming it and set
    ``not_one_over_n``.  ``mirrored`` records how the labelled tangle was
    reached and is only used when ``fraction`` is None.
    """

    vertex: Vertex
    fraction: Optional[ModZClass]
    label: str = ""
    not_one_over_n: bool = False
    mirrored: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertex", Vertex(self.vertex))
        if self.fraction is None:
            if not self.label:
                raise ValueError("a rational tangle without a fraction needs a label")
            return
        if self.fraction.rep == 0:
            raise TrivialTangle(f"fraction {self.fraction} is integral: trivial tangle")
        if self.fraction.rep.denominator % 2 == 0:
            raise InvalidConnectivity(
                f"fraction {self.fraction} has even denominator: the strands "
                "would join the two disk points"
            )
        # the flag is derived whenever the fraction is known
        object.__setattr__(
            self, "not_one_over_n", is_one_over_n(self.fraction) is None
        )
        object.__setattr__(self, "label", "")
        object.__setattr__(self, "mirrored", False)


@dataclass(frozen=True)
class CompositeTau:
    """A tau-tangle given by declared data rather than a fraction.

    ``knots`` is the multiset of constituent knots, kept sorted.
    ``descriptor`` names a presentation; ``mirrored`` and ``starred`` record
    which of the two moves have been applied to it.
    """

    rational_vertex: Optional[Vertex]
    knots: tuple[KnotLabel, ...]
    atoroidal: bool
    descriptor: str
    mirrored: bool = False
    starred: bool = False

    def __post_init__(self):
        if self.rational_vertex is not None:
            object.__setattr__(self, "rational_vertex", Vertex(self.rational_vertex))
        object.__setattr__(self, "knots", tuple(sorted(self.knots)))
        if not re.fullmatch(r"[A-Za-z0-9_.]+", self.descriptor):
            raise ValueError(f"bad descriptor {self.descriptor!r}")

    @property
    def presentation(self) -> str:
        """Descriptor with move markers: ``~`` for mirrored, ``*`` for starred."""
        return self.descriptor + ("~" if self.mirrored else "") + ("*" if self.starred else "")


TauTangle = Union[RationalTau, CompositeTau]


def validate_rational(s, r: Fraction) -> RationalTau:
    """Build the tangle rational at ``s`` with fraction ``r`` (mod Z).

    Raises :class:`TrivialTangle` for integral ``r`` and
    :class:`InvalidConnectivity` when the reduced denominator is even.
    """
    return RationalTau(Vertex(s), modz_normalize(Fraction(r)))


def one_over_n(t: TauTangle) -> Optional[int]:
    """``n`` if ``t`` is 1/n-rational, else None.

    A tangle rational at y or z is never 1/n-rational in the sense used by
    the annulus classification, which only concerns rationality at x.
    """
    if isinstance(t, RationalTau) and t.vertex is Vertex.X and t.fraction is not None:
        return is_one_over_n(t.fraction)
    return None


def _one_over_n_known(t: TauTangle) -> Optional[bool]:
    """True/False when 1/n-rationality is decided, None when it is not."""
    if isinstance(t, CompositeTau):
        return False
    if t.vertex is not Vertex.X:
        return False
    if t.fraction is not None:
        return is_one_over_n(t.fraction) is not None
    return False if t.not_one_over_n else None


# -- moves -----------------------------------------------------------------

def mirror(t: TauTangle) -> TauTangle:
    """Mirror image: fractions and knot handedness are negated."""
    if isinstance(t, RationalTau):
        if t.fraction is None:
            return replace(t, mirrored=not t.mirrored)
        return RationalTau(t.vertex, -t.fraction)
    return replace(
        t,
        knots=tuple(k.mirror_partner for k in t.knots),
        mirrored=not t.mirrored,
    )


def star(t: TauTangle) -> TauTangle:
    """Fix x and exchange y and z.

    On a tangle rational at x this is a half-turn of the 2-string part,
    which leaves every rational tangle unchanged.
    """
    if isinstance(t, RationalTau):
        if t.vertex is Vertex.X:
            return t
        return replace(t, vertex=t.vertex.swapped())
    vertex = t.rational_vertex.swapped() if t.rational_vertex is not None else None
    return replace(t, rational_vertex=vertex, starred=not t.starred)


def is_atoroidal(t: TauTangle) -> bool:
    if isinstance(t, RationalTau):
        return True
    return t.atoroidal


# -- connectivity oracle -----------------------------------------------------
#
# The 2-string part sits in a square with corners NW, NE, SW, SE.  The disk
# points D1, D2 are NE, SE (twisting them shifts the fraction by integers);
# y, z are NW, SW.  Pairings are stored as a partner map over the corners.

_CORNERS = ("NW", "NE", "SW", "SE")
_NAMES = {"NE": "D1", "SE": "D2", "NW": "y", "SW": "z"}
_IDX = {c: i for i, c in enumerate(_CORNERS)}
_INFINITY = (2, 3, 0, 1)        # NW-SW, NE-SE
# rotating the square a quarter turn: NW->SW->SE->NE->NW
_ROT = np.array([_IDX["SW"], _IDX["NW"], _IDX["SE"], _IDX["NE"]])
# one crossing between NE and SE
_TWIST = np.array([_IDX["NW"], _IDX["SE"], _IDX["SW"], _IDX["NE"]])


def _relabel(partner: np.ndarray, perm: np.ndarray) -> np.ndarray:
    """Move every endpoint i to perm[i]; ``partner`` has shape (..., 4)."""
    out = np.empty_like(partner)
    out[..., perm] = perm[partner]
    return out


def _to_pairing(partner) -> frozenset:
    return frozenset(
        frozenset((_NAMES[_CORNERS[i]], _NAMES[_CORNERS[int(partner[i])]]))
        for i in range(4)
    )


def endpoint_pairing(word: WordLike) -> frozenset:
    """Which of D1, D2, y, z the two strands join, tracked box by box.

    Starts from the infinity tangle; each box is a quarter turn followed by
    ``a`` crossings on the disk side, and a last quarter turn closes the
    word.  Only the endpoint permutation is followed, never the fraction.

    >>> sorted(sorted(p) for p in endpoint_pairing([2]))
    [['D1', 'D2'], ['y', 'z']]
    """
    word = word if isinstance(word, TwistWord) else TwistWord(tuple(word))
    partner = np.array(_INFINITY)
    for a in word:
        partner = _relabel(partner, _ROT)
        for _ in range(abs(a) % 2):
            partner = _relabel(partner, _TWIST)
    partner = _relabel(partner, _ROT)
    return _to_pairing(partner)


def endpoint_pairing_batch(words: np.ndarray) -> np.ndarray:
    """Vectorized :func:`endpoint_pairing`; returns partner maps, shape (N, 4).

    Column order is NW, NE, SW, SE (y, D1, z, D2).
    """
    words = np.asarray(words, dtype=np.int64)
    partner = np.tile(np.array(_INFINITY), (words.shape[0], 1))
    for col in words.T:
        partner = _relabel(partner, _ROT)
        odd = (col % 2 != 0)[:, None]
        partner = np.where(odd, _relabel(partner, _TWIST), partner)
    return _relabel(partner, _ROT)


def joins_disk_to_ends(pairing) -> bool:
    """True when each disk point is joined to one of y, z (a valid cone)."""
    if isinstance(pairing, np.ndarray):
        return pairing[..., _IDX["NE"]] != _IDX["SE"]
    return frozenset(("D1", "D2")) not in pairing


# -- equivalence -----------------------------------------------------------

class Status(str, enum.Enum):
    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value.capitalize()


COMPLETENESS_ASSUMPTION = (
    "assumes the fraction mod Z is a complete invariant of rational tau-tangles"
)


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    citations: tuple[str, ...] = field(default=())

    def __str__(self):
        if self.citations:
            return f"{self.status} ({self.reason}; {' / '.join(self.citations)})"
        return f"{self.status} ({self.reason})"

    def to_record(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "citations": list(self.citations),
        }


def _rational_equiv(a: RationalTau, b: RationalTau) -> Verdict:
    if a.vertex is not b.vertex:
        return Verdict(
            Status.INEQUIVALENT,
            f"rational at different vertices ({a.vertex} vs {b.vertex})",
            ("uniqueness of the rational vertex",),
        )
    if a.fraction is not None and b.fraction is not None:
        if a.fraction == b.fraction:
            return Verdict(
                Status.EQUIVALENT,
                f"same vertex and fraction {a.fraction} mod Z; {COMPLETENESS_ASSUMPTION}",
                ("rational tangle classification (assumed)",),
            )
        return Verdict(
            Status.INEQUIVALENT,
            f"fractions differ mod Z ({a.fraction} vs {b.fraction})",
            ("fraction mod Z is a tangle invariant",),
        )
    if a.fraction is None and b.fraction is None:
        if (a.label, a.mirrored) == (b.label, b.mirrored):
            return Verdict(
                Status.EQUIVALENT,
                f"same recorded rational tangle {a.label!r}",
                ("identity",),
            )
        return Verdict(Status.UNKNOWN, "fractions not recorded", ())
    known, unknown = (a, b) if a.fraction is not None else (b, a)
    if unknown.not_one_over_n and is_one_over_n(known.fraction) is not None:
        return Verdict(
            Status.INEQUIVALENT,
            f"{known.fraction} is a 1/n class, {unknown.label!r} is not",
            ("fraction mod Z is a tangle invariant",),
        )
    return Verdict(Status.UNKNOWN, f"fraction of {unknown.label!r} not recorded", ())


def _mixed_equiv(r: RationalTau, c: CompositeTau) -> Verdict:
    if c.rational_vertex is None or c.rational_vertex is not r.vertex:
        return Verdict(
            Status.INEQUIVALENT,
            f"rational at {r.vertex}, composite rational at "
            f"{c.rational_vertex or 'no vertex'}",
            ("uniqueness of the rational vertex",),
        )
    if _one_over_n_known(r):
        return Verdict(
            Status.INEQUIVALENT,
            f"{r.fraction} is a 1/n class; composite tangles are not 1/n-rational",
            ("fraction mod Z is a tangle invariant",),
        )
    return Verdict(
        Status.UNKNOWN,
        f"composite {c.presentation!r} may coincide with a rational tangle at {r.vertex}",
        (),
    )


def _composite_equiv(a: CompositeTau, b: CompositeTau) -> Verdict:
    if a.rational_vertex is not b.rational_vertex:
        return Verdict(
            Status.INEQUIVALENT,
            f"rational at different vertices ({a.rational_vertex or '-'} vs "
            f"{b.rational_vertex or '-'})",
            ("uniqueness of the rational vertex",),
        )
    if a.knots != b.knots:
        ka = ",".join(map(str, a.knots))
        kb = ",".join(map(str, b.knots))
        return Verdict(
            Status.INEQUIVALENT,
            f"constituent knots differ ({ka} vs {kb})",
            ("constituent knots are tangle invariants",),
        )
    if a.presentation == b.presentation:
        return Verdict(
            Status.EQUIVALENT, f"same presentation {a.presentation!r}", ("identity",)
        )
    return Verdict(
        Status.UNKNOWN,
        f"presentations {a.presentation!r} and {b.presentation!r} are not compared",
        (),
    )


def tangle_equiv(t1: TauTangle, t2: TauTangle) -> Verdict:
    """Decide whether two tau-tangles are equivalent (rel boundary).

    Never answers Unknown when both tangles carry fractions.
    """
    if isinstance(t1, RationalTau) and isinstance(t2, RationalTau):
        return _rational_equiv(t1, t2)
    if isinstance(t1, RationalTau):
        return _mixed_equiv(t1, t2)
    if isinstance(t2, RationalTau):
        return _mixed_equiv(t2, t1)
    return _composite_equiv(t1, t2)
