"""Seed-controlled random self-test: graph analysis vs independent oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .assignment import conv_encoder_gates, frame_assignment, satisfies_constraints
from .gf2 import brute_force_min_memory, conv_matrix, default_margin, interior_equal, pearl_matrix
from .graph import build_graph, build_graph_nonnegative, build_graph_nonpositive
from .model import PearlNecklace
from .parser import render


def random_encoder(
    rng: random.Random,
    max_strings: int = 6,
    max_width: int = 4,
    degree_range: tuple[int, int] = (-3, 3),
) -> PearlNecklace:
    """Desk-scale random encoder; never produces a single-qubit CNOT."""
    lo, hi = degree_range
    width = rng.randint(1, max_width)
    gates = []
    for _ in range(rng.randint(0, max_strings)):
        while True:
            a = rng.randint(1, width)
            b = rng.randint(1, width)
            l = rng.randint(lo, hi)
            if not (a == b and l == 0):
                break
        gates.append((a, b, l))
    return PearlNecklace.from_tuples(gates, frame_width=width)


def check_instance(enc: PearlNecklace) -> str | None:
    """Run all cross-checks on one encoder; returns a failure reason or None."""
    fa = frame_assignment(enc)

    if not satisfies_constraints(enc, fa):
        return f"assignment violates constraints (memory={fa.memory})"

    brute = brute_force_min_memory(enc, bound=fa.memory + 1)
    if brute != fa.memory:
        return f"brute force found {brute}, graph found {fa.memory}"

    degrees = [g.degree for g in enc.strings]
    mixed = build_graph(enc)
    if degrees and all(l >= 0 for l in degrees):
        if mixed.edges != build_graph_nonnegative(enc).edges:
            return "mixed builder disagrees with nonnegative builder"
    if degrees and all(l < 0 for l in degrees):
        if mixed.edges != build_graph_nonpositive(enc).edges:
            return "mixed builder disagrees with nonpositive builder"

    margin = default_margin(enc, fa.memory)
    frames = 3 * margin
    pearl = pearl_matrix(enc, frames)
    conv = conv_matrix(enc, conv_encoder_gates(enc, fa), fa.memory, frames)
    if not interior_equal(pearl, conv, margin):
        return f"GF(2) interiors differ (frames={frames}, margin={margin})"
    return None


@dataclass(frozen=True)
class SelftestResult:
    seed: int
    count: int
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(seed: int = 0, count: int = 25) -> SelftestResult:
    """Check ``count`` random instances; failures carry the encoder text so
    they can be replayed. Instances are generated and reported in index order."""
    rng = random.Random(seed)
    failures = []
    for index in range(count):
        enc = random_encoder(rng)
        reason = check_instance(enc)
        if reason is not None:
            source = render(enc).replace("\n", " ")
            failures.append(f"instance {index}: {reason} [{source}]")
    return SelftestResult(seed=seed, count=count, failures=tuple(failures))
