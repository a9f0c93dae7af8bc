"""Minimal-memory analysis of pearl-necklace encoders for CSS quantum
convolutional codes: parse an encoder description, build its weighted
commutativity DAG, and read the minimal memory off the longest path, with an
independent GF(2) simulation oracle for verification."""

from .assignment import (
    ConvGate,
    FrameAssignment,
    LongestPath,
    assignment_from_weights,
    conv_encoder_gates,
    frame_assignment,
    longest_path_weights,
    minimal_memory,
    satisfies_constraints,
)
from .corpus import corpus_files, corpus_path
from .gf2 import (
    Gf2Circuit,
    brute_force_min_memory,
    conv_matrix,
    default_margin,
    fitted_margin,
    gf2_rank,
    interior_equal,
    pearl_matrix,
)
from .graph import (
    START,
    CommutativityGraph,
    Edge,
    GraphMode,
    build_graph,
    build_graph_nonnegative,
    build_graph_nonpositive,
    edge_count_bound_check,
    to_dot,
)
from .model import (
    ConstraintKind,
    GateString,
    PairConstraint,
    PearlNecklace,
    constraint_set,
    degree_notation,
    source_target,
    target_source,
)
from .parser import (
    EncoderSemanticError,
    EncoderSyntaxError,
    ParseError,
    SourceText,
    parse,
    render,
)
from .report import AnalysisReport, analyze, to_json, to_json_dict, to_text
from .selftest import SelftestResult, check_instance, random_encoder, run_selftest

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CommutativityGraph",
    "ConstraintKind",
    "ConvGate",
    "Edge",
    "EncoderSemanticError",
    "EncoderSyntaxError",
    "FrameAssignment",
    "GateString",
    "Gf2Circuit",
    "GraphMode",
    "LongestPath",
    "PairConstraint",
    "ParseError",
    "PearlNecklace",
    "START",
    "SelftestResult",
    "SourceText",
    "analyze",
    "assignment_from_weights",
    "brute_force_min_memory",
    "build_graph",
    "build_graph_nonnegative",
    "build_graph_nonpositive",
    "check_instance",
    "constraint_set",
    "conv_encoder_gates",
    "conv_matrix",
    "corpus_files",
    "corpus_path",
    "default_margin",
    "degree_notation",
    "edge_count_bound_check",
    "fitted_margin",
    "frame_assignment",
    "gf2_rank",
    "interior_equal",
    "longest_path_weights",
    "minimal_memory",
    "parse",
    "pearl_matrix",
    "random_encoder",
    "render",
    "run_selftest",
    "satisfies_constraints",
    "source_target",
    "target_source",
    "to_dot",
    "to_json",
    "to_json_dict",
    "to_text",
]
