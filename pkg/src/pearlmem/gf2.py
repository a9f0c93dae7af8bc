"""Ground-truth checks via GF(2) simulation of truncated CNOT circuits.

CNOT circuits act linearly on basis states (the target bit becomes the XOR of
target and source), so a circuit over F frames of n qubits is an invertible
F*n x F*n binary matrix.  This module builds that matrix for a truncated
pearl-necklace encoder and for the repeated-block convolutional encoder
derived from a frame assignment, compares them away from the truncation
boundary, and brute-forces the minimal memory on small instances.  None of it
reuses the graph construction, so agreement is evidence of correctness.

Conventions: stream frames are numbered 0..F-1 in pearl-necklace order (frame
0 first); the global index of qubit q in frame f is f*n + (q-1).  Window
frames of the convolutional block count bottom to top, so window index w maps
to global frame p + (L - w) for block application p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import ConstraintKind, PearlNecklace, constraint_set


@dataclass(frozen=True, eq=False)
class Gf2Circuit:
    """Linear action of a CNOT circuit on F frames of ``frame_width`` qubits."""

    frames: int
    frame_width: int
    matrix: np.ndarray  # uint8, shape (frames*frame_width,) * 2

    def __post_init__(self) -> None:
        size = self.frames * self.frame_width
        if self.matrix.shape != (size, size):
            raise ValueError(f"matrix shape {self.matrix.shape} != ({size},{size})")
        self.matrix.flags.writeable = False

    @property
    def total_qubits(self) -> int:
        return self.frames * self.frame_width

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Circuit):
            return NotImplemented
        return (
            self.frames == other.frames
            and self.frame_width == other.frame_width
            and bool(np.array_equal(self.matrix, other.matrix))
        )

    def is_invertible(self) -> bool:
        return gf2_rank(self.matrix) == self.total_qubits


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by Gaussian elimination."""
    m = matrix.copy()
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        hits = np.nonzero(m[:, col])[0]
        for r in hits:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def _apply_cnot(matrix: np.ndarray, src_row: int, dst_row: int) -> None:
    matrix[dst_row] ^= matrix[src_row]


def pearl_matrix(enc: PearlNecklace, frames: int) -> Gf2Circuit:
    """Truncate the pearl-necklace encoder to ``frames`` frames.

    Gate strings are applied in order; within a string, frames ascend.  Gates
    whose partner frame falls outside [0, frames) are dropped.
    """
    if frames < 1:
        raise ValueError(f"frames must be >= 1, got {frames}")
    n = enc.frame_width
    matrix = np.eye(frames * n, dtype=np.uint8)
    for g in enc.strings:
        for s in range(frames):
            t = s + g.degree
            if 0 <= t < frames:
                _apply_cnot(matrix, s * n + g.source - 1, t * n + g.target - 1)
    return Gf2Circuit(frames, n, matrix)


def conv_matrix(
    enc: PearlNecklace,
    gates: Sequence[tuple[int, int, int, int]],
    memory: int,
    frames: int,
) -> Gf2Circuit:
    """Apply the convolutional block at offsets 0..frames-memory-1.

    ``gates`` is the block gate list ``(source, target, sigma, tau)`` with
    window frame indices in [0, memory].
    """
    if frames <= memory:
        raise ValueError(
            f"window of {memory + 1} frames does not fit in {frames} frames"
        )
    n = enc.frame_width
    for a, b, sigma, tau in gates:
        if not (0 <= sigma <= memory and 0 <= tau <= memory):
            raise ValueError(f"block gate ({a},{b})({sigma},{tau}) outside window")
    matrix = np.eye(frames * n, dtype=np.uint8)
    for p in range(frames - memory):
        for a, b, sigma, tau in gates:
            src_frame = p + memory - sigma
            dst_frame = p + memory - tau
            _apply_cnot(matrix, src_frame * n + a - 1, dst_frame * n + b - 1)
    return Gf2Circuit(frames, n, matrix)


def default_margin(enc: PearlNecklace, memory: int) -> int:
    """Conservative number of boundary frames to ignore in comparisons."""
    return memory + max((abs(g.degree) for g in enc.strings), default=0) + 1


def fitted_margin(enc: PearlNecklace, memory: int, frames: int) -> int:
    """:func:`default_margin` capped to leave a nonempty interior in ``frames``.

    The cap only ever shrinks the ignored boundary, so a TRUE comparison stays
    meaningful; if the capped margin is too small to hide boundary effects the
    comparison simply comes out FALSE.
    """
    return min(default_margin(enc, memory), max((frames - 1) // 2, 0))


def interior_equal(a: Gf2Circuit, b: Gf2Circuit, margin: int) -> bool:
    """Compare the two actions on qubits at least ``margin`` frames from
    either truncation boundary (rows and columns restricted alike)."""
    if (a.frames, a.frame_width) != (b.frames, b.frame_width):
        raise ValueError(
            f"dimension mismatch: {a.frames}x{a.frame_width} vs {b.frames}x{b.frame_width}"
        )
    if margin < 0 or 2 * margin * a.frame_width >= a.total_qubits:
        raise ValueError(f"margin {margin} leaves no interior in {a.frames} frames")
    lo = margin * a.frame_width
    hi = (a.frames - margin) * a.frame_width
    return bool(np.array_equal(a.matrix[lo:hi, lo:hi], b.matrix[lo:hi, lo:hi]))


def brute_force_min_memory(enc: PearlNecklace, bound: int) -> int | None:
    """Minimal memory by exhaustive search over per-gate base offsets.

    Each gate gets one offset w in [0, bound] (sigma and tau follow from the
    sign rule, so one offset per gate covers all candidates).  An assignment
    is feasible when every pair constraint holds; the result is the minimum
    over feasible assignments of max(sigma, tau), or None when no feasible
    assignment exists within the bound.  Independent of the graph search;
    intended for small instances only.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    n = len(enc.strings)
    degrees = [g.degree for g in enc.strings]
    by_later: list[list[tuple[int, ConstraintKind]]] = [[] for _ in range(n)]
    for c in constraint_set(enc):
        by_later[c.later - 1].append((c.earlier - 1, c.kind))

    sigmas = [0] * n
    taus = [0] * n
    best: int | None = None

    def extend(k: int, cur_max: int) -> None:
        nonlocal best
        if best is not None and cur_max >= best:
            return
        if k == n:
            best = cur_max
            return
        l = degrees[k]
        for w in range(bound + 1):
            if l >= 0:
                tau, sigma = w, w + l
            else:
                sigma, tau = w, w - l
            new_max = max(cur_max, sigma, tau)
            if best is not None and new_max >= best:
                break  # sigma and tau grow with w, so all larger w prune too
            ok = True
            for i, kind in by_later[k]:
                if kind is ConstraintKind.SOURCE_TARGET:
                    if sigmas[i] > tau:
                        ok = False
                        break
                elif taus[i] > sigma:
                    ok = False
                    break
            if ok:
                sigmas[k], taus[k] = sigma, tau
                extend(k + 1, new_max)

    extend(0, 0)
    return best
