"""Receiver-side buffer dynamics over sequences of packet IDs.

A receiver tracks two counters while packets arrive: the highest ID seen so
far and the highest ID up to which the stream is complete (everything at or
below it can be handed to the application).  Their difference is the minimal
buffer needed to park out-of-order packets, with space reserved for IDs that
have not arrived yet.  This module derives that buffer time series, the
cumulative-ACK series, equivalence predicates built on them, and the
ordered/unordered episode structure of a trace.

Packet IDs are positive and distinct; gaps are allowed (lost packets), so an
ID sequence need not be a permutation of 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidSequenceError

ORDERED = "O"
UNORDERED = "U"


def check_ids(ids: Iterable[int]) -> tuple[int, ...]:
    """Validate a packet-ID sequence: positive integers, no repeats."""
    out = tuple(ids)
    seen: set[int] = set()
    for pos, v in enumerate(out, start=1):
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise InvalidSequenceError(
                f"packet ID at position {pos} must be a positive integer, got {v!r}",
                position=pos,
            )
        if v in seen:
            raise InvalidSequenceError(
                f"duplicate packet ID {v} at position {pos}", position=pos
            )
        seen.add(v)
    return out


def check_permutation(ids: Iterable[int]) -> tuple[int, ...]:
    """Validate that ``ids`` is a permutation of 1..n."""
    out = check_ids(ids)
    n = len(out)
    # distinct positive IDs form a permutation of 1..n exactly when none exceeds n
    for pos, v in enumerate(out, start=1):
        if v > n:
            raise InvalidSequenceError(
                f"not a permutation of 1..{n}: ID {v} at position {pos}",
                position=pos,
            )
    return out


def check_buffer_values(values: Iterable[int]) -> tuple[int, ...]:
    """Validate a buffer-size series: non-negative integers."""
    out = tuple(values)
    for pos, v in enumerate(out, start=1):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise InvalidSequenceError(
                f"buffer size at position {pos} must be a non-negative integer, got {v!r}",
                position=pos,
            )
    return out


class ReceiverState:
    """Incremental receiver bookkeeping over a stream of packet IDs.

    ``highest_seen`` is the largest ID observed so far and ``uploadable`` the
    largest ID below which the stream is complete; both start at 0.  The
    buffer size after an arrival is their difference, and ``next_ack`` is the
    cumulative acknowledgment the receiver would emit.
    """

    def __init__(self) -> None:
        self.highest_seen = 0
        self.uploadable = 0
        self.received: set[int] = set()
        self.arrivals = 0

    @property
    def buffer_size(self) -> int:
        return self.highest_seen - self.uploadable

    @property
    def next_ack(self) -> int:
        return self.uploadable + 1

    def observe(self, packet_id: int) -> int:
        """Record one arrival and return the resulting buffer size."""
        pos = self.arrivals + 1
        if isinstance(packet_id, bool) or not isinstance(packet_id, int) or packet_id <= 0:
            raise InvalidSequenceError(
                f"packet ID at position {pos} must be a positive integer, got {packet_id!r}",
                position=pos,
            )
        if packet_id in self.received:
            raise InvalidSequenceError(
                f"duplicate packet ID {packet_id} at position {pos}", position=pos
            )
        self.received.add(packet_id)
        self.arrivals = pos
        if packet_id > self.highest_seen:
            self.highest_seen = packet_id
        while self.uploadable + 1 in self.received:
            self.uploadable += 1
        return self.buffer_size


def buffer_sizes(ids: Iterable[int]) -> tuple[int, ...]:
    """Minimal out-of-order buffer size after each arrival of a trace."""
    state = ReceiverState()
    return tuple(state.observe(v) for v in ids)


def ack_sequence(ids: Iterable[int]) -> tuple[int, ...]:
    """Cumulative acknowledgment after each arrival: first ID not yet received."""
    state = ReceiverState()
    out = []
    for v in ids:
        state.observe(v)
        out.append(state.next_ack)
    return tuple(out)


def fb_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when two traces produce identical buffer-size series."""
    a, b = check_ids(a), check_ids(b)
    if len(a) != len(b):
        return False
    return buffer_sizes(a) == buffer_sizes(b)


def behaviorally_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when two traces produce identical ACK series."""
    a, b = check_ids(a), check_ids(b)
    if len(a) != len(b):
        return False
    return ack_sequence(a) == ack_sequence(b)


def ack_from_buffer(values: Sequence[int]) -> tuple[int, ...]:
    """Derive the ACK series from a buffer-size series alone.

    The buffer can only move in ways that pin the ACK: a shrink by k means
    the k next-expected IDs became uploadable, a flat zero step is an
    in-order arrival, and anything else leaves the ACK untouched.  The series
    is preceded by an implicit 0 and the ACK starts at 1.  Feasibility of the
    input is not checked.
    """
    ack = 1
    prev = 0
    out = []
    for w in values:
        if w < prev:
            ack += prev - w
        elif w == 0 and prev == 0:
            ack += 1
        out.append(ack)
        prev = w
    return tuple(out)


class Episode(NamedTuple):
    state: str  # ORDERED or UNORDERED
    start: int  # 1-based, inclusive
    end: int


@dataclass(frozen=True)
class EpisodeSegmentation:
    """Ordered/unordered episodes of a trace plus its pivot arrivals."""

    episodes: tuple[Episode, ...]
    pivots: frozenset[int]  # 1-based positions where the upload point advanced
    pivot_packets: frozenset[int]  # IDs of the packets at those positions

    def state_at(self, position: int) -> str:
        """Episode state covering a 1-based position."""
        for ep in self.episodes:
            if ep.start <= position <= ep.end:
                return ep.state
        raise IndexError(f"position {position} outside the segmented trace")


def segment_episodes(ids: Iterable[int]) -> EpisodeSegmentation:
    """Split a trace into ordered/unordered episodes and find its pivots.

    A position is ordered when the buffer is empty both before and after the
    arrival; runs of equal state merge into one episode.  A pivot is an
    arrival that advances the upload point, which includes every in-order
    packet and every packet that flushes a buffered run.
    """
    ids = check_ids(ids)
    state = ReceiverState()
    pivots: list[int] = []
    states: list[str] = []
    prev_m = 0
    prev_l = 0
    for pos, v in enumerate(ids, start=1):
        m = state.observe(v)
        if state.uploadable > prev_l:
            pivots.append(pos)
        states.append(ORDERED if m == 0 and prev_m == 0 else UNORDERED)
        prev_m, prev_l = m, state.uploadable
    episodes: list[Episode] = []
    for pos, s in enumerate(states, start=1):
        if episodes and episodes[-1].state == s:
            episodes[-1] = episodes[-1]._replace(end=pos)
        else:
            episodes.append(Episode(s, pos, pos))
    return EpisodeSegmentation(
        episodes=tuple(episodes),
        pivots=frozenset(pivots),
        pivot_packets=frozenset(ids[p - 1] for p in pivots),
    )
