"""Exact continued fractions for twist words, and fractions modulo the integers.

A twist word ``a_1, ..., a_n`` encodes the rational 2-string part of a
tau-tangle.  Its value is the continued fraction ``[a_1, ..., a_n, 0]``,
evaluated innermost-first::

    inner()            = 1/0            (the infinity tangle)
    inner(a_1..a_m)    = a_m + 1/inner(a_1..a_{m-1})
    value(a_1..a_n)    = 1/inner(a_1..a_n)

so ``[3]`` evaluates to ``1/3`` and the empty word to ``0``.  Intermediate
infinities are allowed (``a + 1/inf = a``); only an infinite final value
raises :class:`InfiniteValue`.

Fractions are plain :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

__all__ = [
    "InfiniteValue",
    "TwistWord",
    "ModZClass",
    "cf_eval",
    "cf_expand",
    "modz_normalize",
    "is_one_over_n",
    "matrix_oracle_eval",
    "cf_eval_batch",
    "words_of",
    "parse_fraction",
    "format_fraction",
]


class InfiniteValue(ArithmeticError):
    """The twist word evaluates to 1/0 and defines no tau-tangle fraction."""


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced Fraction.

    Decimal and exponent forms accepted by ``Fraction(str)`` are rejected.
    """
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise InfiniteValue(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_fraction(r: Fraction) -> str:
    return str(Fraction(r))


WordLike = Union["TwistWord", Sequence[int]]


@dataclass(frozen=True)
class TwistWord:
    """The integer twist counts of the boxes of a rational 2-string tangle."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        for a in entries:
            if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
                raise TypeError(f"twist entries must be integers, got {a!r}")
        object.__setattr__(self, "entries", tuple(int(a) for a in entries))

    @property
    def layout(self) -> str:
        """``"odd"`` or ``"even"``: which of the two box layouts draws this word."""
        return "odd" if len(self.entries) % 2 else "even"

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(str(a) for a in self.entries)

    def negated(self) -> "TwistWord":
        return TwistWord(tuple(-a for a in self.entries))

    @classmethod
    def parse(cls, text: str) -> "TwistWord":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise ValueError(f"not a comma-separated integer list: {text!r}") from None


def _as_word(word: WordLike) -> TwistWord:
    return word if isinstance(word, TwistWord) else TwistWord(tuple(word))


# Projective values: ``None`` stands for 1/0.

def _reciprocal(x: Optional[Fraction]) -> Optional[Fraction]:
    if x is None:
        return Fraction(0)
    if x == 0:
        return None
    return 1 / x


def cf_eval(word: WordLike) -> Fraction:
    """Value of ``[a_1, ..., a_n, 0]`` as an exact Fraction.

    >>> cf_eval([3])
    Fraction(1, 3)
    >>> cf_eval([2, 2])
    Fraction(2, 5)
    """
    inner: Optional[Fraction] = None
    for a in _as_word(word):
        rec = _reciprocal(inner)
        inner = None if rec is None else a + rec
    r = _reciprocal(inner)
    if r is None:
        raise InfiniteValue(f"twist word [{_as_word(word)}] evaluates to 1/0")
    return r


def matrix_oracle_eval(word: WordLike) -> Fraction:
    """Evaluate the same continued fraction by a product of integer matrices.

    Each box acts on the column ``(p, q)`` (meaning ``p/q``) by
    ``[[a, 1], [1, 0]]``, starting from ``(1, 0)``; the final reciprocal
    swaps the two coordinates.
    """
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in _as_word(word):
        # M <- [[a, 1], [1, 0]] @ M
        m00, m01, m10, m11 = a * m00 + m10, a * m01 + m11, m00, m01
    p, q = m00, m10  # M @ (1, 0)
    if p == 0:
        raise InfiniteValue(f"twist word [{_as_word(word)}] evaluates to 1/0")
    return Fraction(q, p)


def _regular_cf(p: int, q: int) -> list[int]:
    """Regular continued fraction of p/q (q > 0, p >= 0) by Euclid."""
    terms = []
    while q:
        b, r = divmod(p, q)
        terms.append(b)
        p, q = q, r
    return terms


def cf_expand(r: Fraction) -> TwistWord:
    """Canonical twist word with ``cf_eval(cf_expand(r)) == r``.

    Positive ``r`` gets the Euclidean expansion with nonnegative entries
    (only the last entry can be 0, when ``r > 1``); negative ``r`` gets the
    negation of the expansion of ``-r``; ``0`` gives the empty word.
    """
    r = Fraction(r)
    if r == 0:
        return TwistWord(())
    if r < 0:
        return cf_expand(-r).negated()
    # 1/r = a_n + 1/(a_{n-1} + ...), so the word is the reversed expansion of 1/r
    terms = _regular_cf(r.denominator, r.numerator)
    return TwistWord(tuple(reversed(terms)))


@dataclass(frozen=True, order=True)
class ModZClass:
    """A fraction modulo the integers, held by its representative in [0, 1)."""

    rep: Fraction

    def __post_init__(self):
        rep = Fraction(self.rep)
        if not 0 <= rep < 1:
            raise ValueError(f"representative {rep} is not in [0, 1)")
        object.__setattr__(self, "rep", rep)

    @property
    def is_integral(self) -> bool:
        return self.rep == 0

    def __neg__(self) -> "ModZClass":
        return modz_normalize(-self.rep)

    def __str__(self):
        return format_fraction(self.rep)


def modz_normalize(r: Fraction) -> ModZClass:
    """The class of ``r`` in Q/Z.

    >>> str(modz_normalize(Fraction(-2, 5)))
    '3/5'
    """
    r = Fraction(r)
    return ModZClass(r - (r.numerator // r.denominator))


def is_one_over_n(c: ModZClass) -> Optional[int]:
    """The integer ``n`` with ``|n| >= 2`` and ``1/n = c`` mod Z, or None.

    Positive ``n`` has representative ``1/n``; negative ``n`` has
    ``(|n|-1)/|n|``.  For the class 1/2 both signs agree and ``2`` is
    returned.
    """
    p, q = c.rep.numerator, c.rep.denominator
    if p == 0 or q < 2:
        return None
    if p == 1:
        return q
    if p == q - 1:
        return -q
    return None


def cf_eval_batch(words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`cf_eval` over the rows of an integer array.

    Returns ``(num, den)`` arrays of reduced fractions with ``den >= 0``.
    Rows whose value is 1/0 come back as ``(1, 0)`` instead of raising.
    Intermediate values must fit in int64; callers keep entries and
    lengths small.
    """
    words = np.asarray(words, dtype=np.int64)
    if words.ndim != 2:
        raise ValueError("words must be a 2-d array, one word per row")
    n = words.shape[0]
    p = np.ones(n, dtype=np.int64)
    q = np.zeros(n, dtype=np.int64)
    for col in words.T:
        p, q = col * p + q, p
    num, den = q, p
    g = np.gcd(num, den)
    g[g == 0] = 1
    num, den = num // g, den // g
    sign = np.where(den < 0, -1, 1)
    num, den = num * sign, den * sign
    inf = den == 0
    num[inf] = 1
    return num, den


def words_of(entries: Iterable[int], length: int, prefix: Sequence[int] = ()) -> np.ndarray:
    """All words of the given length over ``entries`` that start with ``prefix``.

    One word per row, in lexicographic order of the entries.
    """
    entries = np.asarray(sorted(set(entries)), dtype=np.int64)
    free = length - len(prefix)
    if free < 0:
        raise ValueError("prefix longer than the words")
    if free == 0:
        return np.asarray([list(prefix)], dtype=np.int64).reshape(1, length)
    grids = np.meshgrid(*([entries] * free), indexing="ij")
    tail = np.stack([g.ravel() for g in grids], axis=1)
    head = np.broadcast_to(np.asarray(prefix, dtype=np.int64), (tail.shape[0], len(prefix)))
    return np.concatenate([head, tail], axis=1)

