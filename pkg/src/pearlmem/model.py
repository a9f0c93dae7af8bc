"""Domain model for pearl-necklace encoders built from repeated CNOT gate strings.

A pearl-necklace encoder acts on an infinite stream of frames of ``frame_width``
qubits.  Each gate string ``CNOT(a,b)(D^l)`` places one CNOT from qubit ``a`` of
every frame ``s`` to qubit ``b`` of frame ``s + l``.  A pair of gate strings is
flagged as non-commuting when the source qubit index of one equals the target
qubit index of the other; those collisions are what the rest of the package
turns into scheduling constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


def degree_notation(degree: int) -> str:
    """Delay-operator notation for a degree: 0 -> "1", 1 -> "D", k -> "D^k"."""
    if degree == 0:
        return "1"
    if degree == 1:
        return "D"
    return f"D^{degree}"


@dataclass(frozen=True)
class GateString:
    """One repeated CNOT string: qubit ``source`` of every frame controls qubit
    ``target`` of the frame ``degree`` frames later.

    Qubit indices are 1-based within a frame.  ``degree`` may be any signed
    integer; ``source == target`` is allowed only with a nonzero degree, since
    the two endpoints then live in different frames.
    """

    source: int
    target: int
    degree: int

    def __post_init__(self) -> None:
        if self.source < 1 or self.target < 1:
            raise ValueError(
                f"qubit indices must be >= 1, got ({self.source},{self.target})"
            )
        if self.source == self.target and self.degree == 0:
            raise ValueError(
                f"CNOT({self.source},{self.target})(1) would act on a single qubit"
            )

    def notation(self) -> str:
        return f"CNOT({self.source},{self.target})({degree_notation(self.degree)})"


@dataclass(frozen=True)
class PearlNecklace:
    """An ordered succession of gate strings over frames of ``frame_width`` qubits."""

    strings: tuple[GateString, ...]
    frame_width: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "strings", tuple(self.strings))
        if self.frame_width < 1:
            raise ValueError(f"frame_width must be >= 1, got {self.frame_width}")
        for k, g in enumerate(self.strings, start=1):
            if g.source > self.frame_width or g.target > self.frame_width:
                raise ValueError(
                    f"gate string {k} ({g.notation()}) references a qubit beyond "
                    f"frame_width {self.frame_width}"
                )

    @classmethod
    def from_tuples(
        cls,
        gates: Iterable[tuple[int, int, int]],
        frame_width: int | None = None,
    ) -> "PearlNecklace":
        """Build from ``(source, target, degree)`` triples.

        When ``frame_width`` is omitted it defaults to the largest qubit index
        used (at least 1).
        """
        strings = tuple(GateString(a, b, l) for a, b, l in gates)
        if frame_width is None:
            frame_width = max((max(g.source, g.target) for g in strings), default=1)
        return cls(strings, frame_width)

    def __len__(self) -> int:
        return len(self.strings)


class ConstraintKind(Enum):
    SOURCE_TARGET = "source-target"
    TARGET_SOURCE = "target-source"


@dataclass(frozen=True)
class PairConstraint:
    """A frame-index inequality forced by a non-commuting ordered pair.

    ``earlier`` and ``later`` are 1-based gate-string indices with
    ``earlier < later``.  In convolutional-encoder frame numbering the
    constraint reads sigma_earlier <= tau_later for SOURCE_TARGET and
    tau_earlier <= sigma_later for TARGET_SOURCE.
    """

    earlier: int
    later: int
    kind: ConstraintKind

    def __post_init__(self) -> None:
        if not 1 <= self.earlier < self.later:
            raise ValueError(
                f"need 1 <= earlier < later, got ({self.earlier},{self.later})"
            )


def source_target(g1: GateString, g2: GateString) -> bool:
    """True when the first string's source collides with the second's target."""
    return g1.source == g2.target


def target_source(g1: GateString, g2: GateString) -> bool:
    """True when the first string's target collides with the second's source."""
    return g1.target == g2.source


def constraint_set(enc: PearlNecklace) -> list[PairConstraint]:
    """All inequality constraints a correct convolutional realization must obey.

    Scans every ordered pair ``i < j`` once; a pair may contribute both a
    SOURCE_TARGET and a TARGET_SOURCE constraint.  Pairs with no constraint
    commute as GF(2) circuits.
    """
    strings: Sequence[GateString] = enc.strings
    out: list[PairConstraint] = []
    for i in range(len(strings)):
        for j in range(i + 1, len(strings)):
            if source_target(strings[i], strings[j]):
                out.append(PairConstraint(i + 1, j + 1, ConstraintKind.SOURCE_TARGET))
            if target_source(strings[i], strings[j]):
                out.append(PairConstraint(i + 1, j + 1, ConstraintKind.TARGET_SOURCE))
    return out
