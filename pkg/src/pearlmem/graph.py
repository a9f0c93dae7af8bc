"""Weighted commutativity DAG over the gate strings of a pearl-necklace encoder.

Vertices are ordered START (0), gate strings 1..N, END (N+1).  START connects
to every gate vertex with weight 0 and every gate vertex j connects to END
with weight |l_j|.  A gate-to-gate edge i -> j exists only when the pair
(i, j) fails to commute; its weight encodes how far the collision pushes gate
j's frame placement.  The longest START -> END path equals the minimal memory
of any convolutional realization.

Edge weights between gates i < j, by degree signs (ST = source-target
collision, TS = target-source collision):

    l_i >= 0, l_j >= 0:  ST -> l_i,        else TS -> -l_j        (one edge)
    l_i <  0, l_j >= 0:  ST -> 0,          and  TS -> |l_i| - l_j (independent)
    l_i >= 0, l_j <  0:  ST -> l_i - |l_j|, and TS -> 0           (independent)
    l_i <  0, l_j <  0:  TS -> |l_i|,      else ST -> -|l_j|      (one edge)

In the same-sign rows one collision kind subsumes the other, so only the
dominant edge is drawn; mixed-sign rows may contribute two parallel edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .model import PearlNecklace

START = 0


class GraphMode(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    MIXED = "mixed"


class Edge(NamedTuple):
    src: int
    dst: int
    weight: int


@dataclass(frozen=True)
class CommutativityGraph:
    """Immutable weighted DAG; edges are sorted by (src, dst, weight)."""

    gate_count: int
    edges: tuple[Edge, ...]
    mode: GraphMode
    pair_inspections: int

    @property
    def end(self) -> int:
        return self.gate_count + 1

    @property
    def vertex_count(self) -> int:
        return self.gate_count + 2

    def gate_edges(self) -> tuple[Edge, ...]:
        """Edges between gate vertices only (START/END edges stripped)."""
        return tuple(
            e for e in self.edges if e.src != START and e.dst != self.end
        )


def _boundary_edges(degrees: list[int], n: int) -> list[Edge]:
    end = n + 1
    edges = [Edge(START, j, 0) for j in range(1, n + 1)]
    edges.extend(Edge(j, end, abs(degrees[j - 1])) for j in range(1, n + 1))
    return edges


def build_graph(enc: PearlNecklace) -> CommutativityGraph:
    """Build the commutativity graph for arbitrary signed degrees."""
    gates = [(g.source, g.target, g.degree) for g in enc.strings]
    n = len(gates)
    edges = _boundary_edges([l for _, _, l in gates], n)
    inspections = 0
    for j in range(2, n + 1):
        aj, bj, lj = gates[j - 1]
        for i in range(1, j):
            inspections += 1
            ai, bi, li = gates[i - 1]
            st = ai == bj
            ts = bi == aj
            if li >= 0 and lj >= 0:
                if st:
                    edges.append(Edge(i, j, li))
                elif ts:
                    edges.append(Edge(i, j, -lj))
            elif li < 0 and lj >= 0:
                if st:
                    edges.append(Edge(i, j, 0))
                if ts:
                    edges.append(Edge(i, j, -li - lj))
            elif li >= 0 and lj < 0:
                if st:
                    edges.append(Edge(i, j, li + lj))
                if ts:
                    edges.append(Edge(i, j, 0))
            else:
                if ts:
                    edges.append(Edge(i, j, -li))
                elif st:
                    edges.append(Edge(i, j, lj))
    edges.sort()
    return CommutativityGraph(n, tuple(edges), GraphMode.MIXED, inspections)


def build_graph_nonnegative(enc: PearlNecklace) -> CommutativityGraph:
    """Direct construction for encoders whose degrees are all >= 0."""
    gates = [(g.source, g.target, g.degree) for g in enc.strings]
    if any(l < 0 for _, _, l in gates):
        raise ValueError("nonnegative builder requires all degrees >= 0")
    n = len(gates)
    edges = _boundary_edges([l for _, _, l in gates], n)
    inspections = 0
    for j in range(2, n + 1):
        aj, bj, lj = gates[j - 1]
        for i in range(1, j):
            inspections += 1
            ai, bi, li = gates[i - 1]
            if ai == bj:
                edges.append(Edge(i, j, li))
            elif bi == aj:
                edges.append(Edge(i, j, -lj))
    edges.sort()
    return CommutativityGraph(n, tuple(edges), GraphMode.POSITIVE, inspections)


def build_graph_nonpositive(enc: PearlNecklace) -> CommutativityGraph:
    """Direct construction for encoders whose degrees are all <= 0."""
    gates = [(g.source, g.target, g.degree) for g in enc.strings]
    if any(l > 0 for _, _, l in gates):
        raise ValueError("nonpositive builder requires all degrees <= 0")
    n = len(gates)
    edges = _boundary_edges([l for _, _, l in gates], n)
    inspections = 0
    for j in range(2, n + 1):
        aj, bj, lj = gates[j - 1]
        for i in range(1, j):
            inspections += 1
            ai, bi, li = gates[i - 1]
            if bi == aj:
                edges.append(Edge(i, j, -li))
            elif ai == bj:
                edges.append(Edge(i, j, lj))
    edges.sort()
    return CommutativityGraph(n, tuple(edges), GraphMode.NEGATIVE, inspections)


def edge_count_bound_check(g: CommutativityGraph, n_strings: int) -> bool:
    """Structural witness of the quadratic construction bound.

    At most two gate-to-gate edges can exist per ordered pair, plus one
    START edge and one END edge per gate vertex.
    """
    gate_edge_count = len(g.gate_edges())
    return (
        gate_edge_count <= n_strings * (n_strings - 1)
        and len(g.edges) <= n_strings * (n_strings - 1) + 2 * n_strings
    )


def to_dot(g: CommutativityGraph, enc: PearlNecklace) -> str:
    """Graphviz text for the graph; output is byte-deterministic."""
    if len(enc.strings) != g.gate_count:
        raise ValueError("graph was not built from this encoder")

    def vertex_name(v: int) -> str:
        if v == START:
            return "START"
        if v == g.end:
            return "END"
        return str(v)

    lines = ["digraph commutativity {", "  rankdir=LR;", '  START [label="START"];']
    for k, gate in enumerate(enc.strings, start=1):
        lines.append(f'  {k} [label="{k}: {gate.notation()}"];')
    lines.append('  END [label="END"];')
    for e in g.edges:  # already sorted by (src, dst, weight)
        lines.append(
            f'  {vertex_name(e.src)} -> {vertex_name(e.dst)} [label="{e.weight}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
