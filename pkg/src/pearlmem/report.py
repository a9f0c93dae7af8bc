"""Analysis results bundled for human-readable and JSON output."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .assignment import (
    FrameAssignment,
    LongestPath,
    assignment_from_weights,
    longest_path_weights,
)
from .graph import START, CommutativityGraph, build_graph
from .model import PearlNecklace


@dataclass(frozen=True)
class AnalysisReport:
    encoder: PearlNecklace
    graph: CommutativityGraph
    search: LongestPath
    assignment: FrameAssignment
    verification: dict | None = None


def analyze(enc: PearlNecklace) -> AnalysisReport:
    g = build_graph(enc)
    lp = longest_path_weights(g)
    fa = assignment_from_weights(enc, lp)
    return AnalysisReport(encoder=enc, graph=g, search=lp, assignment=fa)


def _vertex_label(v: int, gate_count: int) -> str | int:
    if v == START:
        return "START"
    if v == gate_count + 1:
        return "END"
    return v


def to_json_dict(report: AnalysisReport) -> dict:
    enc = report.encoder
    fa = report.assignment
    gates = [
        {
            "k": k,
            "a": g.source,
            "b": g.target,
            "l": g.degree,
            "sigma": fa.sigma[k - 1],
            "tau": fa.tau[k - 1],
            "w": report.search.gate_weights[k - 1],
        }
        for k, g in enumerate(enc.strings, start=1)
    ]
    out: dict = {
        "input": {
            "gate_strings": [g.notation() for g in enc.strings],
            "qubits": enc.frame_width,
        },
        "memory_frames": fa.memory,
        "memory_qubits": fa.memory_qubits,
        "gates": gates,
        "longest_path": {
            "vertices": [
                _vertex_label(v, report.graph.gate_count) for v in report.search.path
            ],
            "weight": report.search.end_weight,
        },
        "graph": {
            "vertex_count": report.graph.vertex_count,
            "edge_count": len(report.graph.edges),
        },
    }
    if report.verification is not None:
        out["verification"] = report.verification
    return out


def to_json(report: AnalysisReport) -> str:
    """Byte-deterministic JSON: sorted keys, fixed indent, no timestamps."""
    return json.dumps(to_json_dict(report), sort_keys=True, indent=2) + "\n"


def to_text(report: AnalysisReport) -> str:
    enc = report.encoder
    fa = report.assignment
    lines = [
        f"encoder: {len(enc.strings)} gate strings, {enc.frame_width} qubits per frame",
        f"memory: {fa.memory} frames ({fa.memory_qubits} qubits)",
        "",
        "  k  gate                 w  sigma  tau",
    ]
    for k, g in enumerate(enc.strings, start=1):
        lines.append(
            f"  {k:<2} {g.notation():<19} {report.search.gate_weights[k - 1]:>3} "
            f"{fa.sigma[k - 1]:>6} {fa.tau[k - 1]:>4}"
        )
    path = " -> ".join(
        str(_vertex_label(v, report.graph.gate_count)) for v in report.search.path
    )
    lines.append("")
    lines.append(f"longest path: {path} (weight {report.search.end_weight})")
    lines.append(
        f"graph: {report.graph.vertex_count} vertices, {len(report.graph.edges)} edges"
    )
    if report.verification is not None:
        lines.append("verification:")
        for key in sorted(report.verification):
            lines.append(f"  {key}: {report.verification[key]}")
    return "\n".join(lines) + "\n"
