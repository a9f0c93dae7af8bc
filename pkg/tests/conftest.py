"""Shared fixtures and hypothesis strategies for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from pearlmem import PearlNecklace

# The three bundled five-string encoders plus the commuting pair, as triples.
POS_GATES = [(2, 3, 1), (1, 2, 1), (2, 3, 2), (1, 2, 0), (2, 1, 1)]
NEG_GATES = [(2, 3, -1), (1, 2, -1), (2, 3, -2), (1, 2, 0), (2, 1, -1)]
MIX_GATES = [(2, 3, 1), (1, 2, -1), (2, 3, -2), (1, 2, 0), (2, 1, 1)]
COMMUTING_GATES = [(1, 2, 0), (1, 3, 1)]


def make_encoder(gates, frame_width=None) -> PearlNecklace:
    return PearlNecklace.from_tuples(gates, frame_width=frame_width)


def gate_triples(max_width: int = 4, degree_range: tuple[int, int] = (-3, 3)):
    return st.tuples(
        st.integers(1, max_width),
        st.integers(1, max_width),
        st.integers(*degree_range),
    ).filter(lambda t: not (t[0] == t[1] and t[2] == 0))


@st.composite
def encoders(
    draw,
    max_strings: int = 6,
    max_width: int = 4,
    degree_range: tuple[int, int] = (-3, 3),
) -> PearlNecklace:
    width = draw(st.integers(1, max_width))
    gates = draw(
        st.lists(gate_triples(width, degree_range), min_size=0, max_size=max_strings)
    )
    return PearlNecklace.from_tuples(gates, frame_width=width)
