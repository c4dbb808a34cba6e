"""Rebuild the mildly-disordered preimage of a buffer-size series.

A buffer series pins down most of its source trace: a growth step names the
new highest ID, a shrink step names the long-missing packet that finally
arrived and advanced the ACK, and the remaining flat steps can only take the
smallest IDs not otherwise spoken for.  For source permutations that split
into at most three ascending subsequences this determines the entire trace
uniquely; this module rebuilds it, or reports that no such preimage exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .buffering import buffer_sizes, check_buffer_values
from .disorder import sus

MAX_SUS = 3


@dataclass(frozen=True)
class ReconstructionTrace:
    """Full record of one reconstruction run, successful or not."""

    buffer_values: tuple[int, ...]
    packets: tuple[int, ...]  # candidate IDs, one per position
    acks: tuple[int, ...]  # ACK series rebuilt alongside
    phase1_positions: frozenset[int]  # pinned by a buffer change (1-based)
    phase2_positions: frozenset[int]  # filled with smallest unused IDs
    permutation: tuple[int, ...] | None  # verified result, None if infeasible


def reconstruct_trace(values: Iterable[int]) -> ReconstructionTrace:
    """Run the two assignment phases and verify the candidate.

    Phase 1 walks the series once, with an implicit leading 0 and the ACK
    starting at 1: growth by d pins the arrival to d above the previous
    highest ID (which equals ACK + previous size - 1); a shrink pins it to
    the previous ACK and advances the ACK by the shrink amount; a flat zero
    step is an in-order arrival and advances the ACK by one.  Phase 2 fills
    every deferred position, left to right, with the smallest positive ID not
    used anywhere yet.

    The candidate only stands if it is a permutation of 1..n whose buffer
    series reproduces the input and whose SUS is at most MAX_SUS; otherwise
    ``permutation`` is None.
    """
    w = check_buffer_values(values)
    n = len(w)
    packets: list[int | None] = [None] * n
    acks: list[int] = []
    phase1: list[int] = []
    phase2: list[int] = []
    ack = 1
    prev = 0
    for i, wi in enumerate(w):
        if wi < prev:
            packets[i] = ack
            ack += prev - wi
            phase1.append(i + 1)
        elif wi > prev:
            packets[i] = ack + wi - 1
            phase1.append(i + 1)
        else:
            phase2.append(i + 1)
            if wi == 0:
                ack += 1
        acks.append(ack)
        prev = wi

    used = {p for p in packets if p is not None}
    next_free = 1
    for pos in phase2:
        while next_free in used:
            next_free += 1
        packets[pos - 1] = next_free
        used.add(next_free)

    candidate = tuple(packets)  # type: ignore[arg-type]
    permutation = None
    if sorted(candidate) == list(range(1, n + 1)):
        if buffer_sizes(candidate) == w and sus(candidate) <= MAX_SUS:
            permutation = candidate
    return ReconstructionTrace(
        buffer_values=w,
        packets=candidate,
        acks=tuple(acks),
        phase1_positions=frozenset(phase1),
        phase2_positions=frozenset(phase2),
        permutation=permutation,
    )


def reconstruct(values: Iterable[int]) -> tuple[int, ...] | None:
    """The unique SUS<=3 permutation whose buffer series is ``values``, or None."""
    return reconstruct_trace(values).permutation
