from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hbk.engine import HbkSpec
from hbk.tangle import CompositeTau, KnotLabel, RationalTau, Vertex, validate_rational
from hbk.contfrac import modz_normalize

# lines recorded by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- strategies ------------------------------------------------------------------

vertices = st.sampled_from(list(Vertex))


@st.composite
def valid_fractions(draw, max_den=99):
    """Fractions whose class is nontrivial with odd denominator."""
    q = draw(st.integers(1, (max_den - 1) // 2).map(lambda m: 2 * m + 1))
    p = draw(st.integers(1, q - 1).filter(lambda p: Fraction(p, q).denominator == q))
    shift = draw(st.integers(-5, 5))
    return Fraction(p, q) + shift


@st.composite
def rational_tangles(draw, vertex=None):
    v = draw(vertices) if vertex is None else vertex
    return validate_rational(v, draw(valid_fractions()))


knot_labels = st.builds(
    KnotLabel,
    st.sampled_from(["trefoil", "fig8", "5_2", "cinquefoil"]),
    st.sampled_from(["+", "-", "="]),
)


@st.composite
def composite_tangles(draw):
    return CompositeTau(
        draw(st.none() | vertices),
        tuple(draw(st.lists(knot_labels, min_size=1, max_size=3))),
        True,
        draw(st.sampled_from(["a", "b", "tau_7_59"])),
        mirrored=draw(st.booleans()),
        starred=draw(st.booleans()),
    )


@st.composite
def unlabelled_rational(draw):
    return RationalTau(
        draw(vertices), None, label=draw(st.sampled_from(["7_36", "7_38"])),
        not_one_over_n=True, mirrored=draw(st.booleans()),
    )


tangles = rational_tangles() | composite_tangles() | unlabelled_rational()


@st.composite
def rational_specs(draw, vertex=Vertex.X):
    return HbkSpec(draw(st.integers(-4, 4)), draw(rational_tangles(vertex=vertex)))


@pytest.fixture
def spec_of():
    def make(k, r, s="x"):
        return HbkSpec(k, validate_rational(s, Fraction(r)))
    return make


def one_over(n):
    return modz_normalize(Fraction(1, n))
