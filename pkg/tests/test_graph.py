"""Tests for commutativity-graph construction and DOT export."""

import random

import pytest
from conftest import MIX_GATES, POS_GATES, encoders, make_encoder
from hypothesis import given

from pearlmem import (
    START,
    GraphMode,
    build_graph,
    build_graph_nonnegative,
    build_graph_nonpositive,
    constraint_set,
    edge_count_bound_check,
    random_encoder,
    to_dot,
)


def test_unidirectional_gate_edges():
    g = build_graph(make_encoder(POS_GATES))
    assert g.gate_edges() == (
        (1, 2, 1),
        (1, 4, 1),
        (2, 3, -2),
        (2, 5, 1),
        (3, 4, 2),
        (4, 5, 0),
    )


def test_mixed_sign_gate_edges_include_parallel_pair():
    g = build_graph(make_encoder(MIX_GATES))
    assert g.gate_edges() == (
        (1, 2, 0),
        (1, 4, 1),
        (2, 3, 1),
        (2, 5, 0),
        (2, 5, 0),
        (3, 4, 0),
        (4, 5, 0),
    )


def test_boundary_edges():
    g = build_graph(make_encoder(POS_GATES))
    start_edges = [e for e in g.edges if e.src == START]
    end_edges = [e for e in g.edges if e.dst == g.end]
    assert start_edges == [(0, j, 0) for j in range(1, 6)]
    assert end_edges == [(1, 6, 1), (2, 6, 1), (3, 6, 2), (4, 6, 0), (5, 6, 1)]


def test_single_string_graph():
    g = build_graph(make_encoder([(1, 2, 2)]))
    assert g.edges == ((0, 1, 0), (1, 2, 2))
    assert g.vertex_count == 3


def test_modes():
    assert build_graph(make_encoder(POS_GATES)).mode is GraphMode.MIXED
    assert build_graph_nonnegative(make_encoder(POS_GATES)).mode is GraphMode.POSITIVE
    assert (
        build_graph_nonpositive(make_encoder([(1, 2, -1)])).mode is GraphMode.NEGATIVE
    )


def test_specialized_builders_reject_wrong_signs():
    with pytest.raises(ValueError):
        build_graph_nonnegative(make_encoder([(1, 2, -1)]))
    with pytest.raises(ValueError):
        build_graph_nonpositive(make_encoder([(1, 2, 1)]))


@given(encoders())
def test_graph_is_a_dag_in_construction_order(enc):
    g = build_graph(enc)
    assert all(e.src < e.dst for e in g.edges)


@given(encoders())
def test_pair_inspections_are_quadratic(enc):
    n = len(enc.strings)
    assert build_graph(enc).pair_inspections == n * (n - 1) // 2


@given(encoders())
def test_gate_edges_match_constraint_pairs(enc):
    g = build_graph(enc)
    edge_pairs = {(e.src, e.dst) for e in g.gate_edges()}
    constraint_pairs = {(c.earlier, c.later) for c in constraint_set(enc)}
    assert edge_pairs == constraint_pairs


def test_mixed_equals_nonnegative_builder_on_nonnegative_input():
    rng = random.Random(11)
    for _ in range(60):
        enc = random_encoder(rng, degree_range=(0, 3))
        assert build_graph(enc).edges == build_graph_nonnegative(enc).edges


def test_mixed_equals_nonpositive_builder_on_negative_input():
    rng = random.Random(12)
    for _ in range(60):
        enc = random_encoder(rng, degree_range=(-3, -1))
        assert build_graph(enc).edges == build_graph_nonpositive(enc).edges


def test_edge_count_bound():
    assert edge_count_bound_check(build_graph(make_encoder(POS_GATES)), 5)
    assert edge_count_bound_check(build_graph(make_encoder([])), 0)
    enc = random_encoder(random.Random(5), max_strings=50, max_width=3)
    assert edge_count_bound_check(build_graph(enc), len(enc.strings))


def test_dot_single_string():
    enc = make_encoder([(1, 2, 2)])
    dot = to_dot(build_graph(enc), enc)
    assert dot.startswith("digraph")
    assert '1 [label="1: CNOT(1,2)(D^2)"];' in dot
    assert 'START -> 1 [label="0"];' in dot
    assert '1 -> END [label="2"];' in dot


def test_dot_unidirectional_contains_weighted_edge():
    enc = make_encoder(POS_GATES)
    dot = to_dot(build_graph(enc), enc)
    assert '3 -> 4 [label="2"];' in dot


def test_dot_mixed_has_two_parallel_edges():
    enc = make_encoder(MIX_GATES)
    dot = to_dot(build_graph(enc), enc)
    assert dot.count('2 -> 5 [label="0"];') == 2


def test_dot_is_deterministic():
    enc = make_encoder(MIX_GATES)
    assert to_dot(build_graph(enc), enc) == to_dot(build_graph(enc), enc)


def test_dot_rejects_mismatched_encoder():
    with pytest.raises(ValueError):
        to_dot(build_graph(make_encoder(POS_GATES)), make_encoder([(1, 2, 0)]))
