"""Reordering metrics and their behaviour under buffer equivalence.

A metric is consistent when it takes equal values on any two traces with the
same buffer series.  Metrics computed from the buffer series itself (mean
occupancy, the receiver-window series) are consistent by construction; the
displacement distribution is not, and ``consistency_counterexample`` finds
witnesses for that by exhausting all permutations of a small length.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .buffering import buffer_sizes, check_permutation
from .errors import CapacityExceededError, InvalidParameterError

MAX_CONSISTENCY_N = 9


@dataclass(frozen=True)
class DisplacementDistribution:
    """Exact displacement histogram of a permutation, truncated to [-dt, dt].

    Counts stay integral so equality between distributions is exact;
    ``fractions`` derives the normalized view for display.
    """

    counts: dict[int, int]
    total: int
    dt: int | float

    def fractions(self) -> dict[int, Fraction]:
        return {d: Fraction(c, self.total) for d, c in sorted(self.counts.items())}


@dataclass(frozen=True)
class RcvWindowSeries:
    """Advertised receiver window over time for a fixed buffer capacity."""

    rcv_buffer: int
    values: tuple[int, ...]


def _check_dt(dt: int | float) -> None:
    if isinstance(dt, int) and not isinstance(dt, bool) and dt > 0:
        return
    if isinstance(dt, float) and math.isinf(dt) and dt > 0:
        return
    raise InvalidParameterError(f"dt must be a positive integer or math.inf, got {dt!r}")


def reorder_density(perm: Iterable[int], dt: int | float) -> DisplacementDistribution:
    """Distribution of displacements of a permutation: value minus 1-based slot.

    Displacements outside [-dt, dt] are dropped; pass ``math.inf`` to keep
    them all.
    """
    perm = check_permutation(perm)
    _check_dt(dt)
    counts: Counter[int] = Counter()
    for i, v in enumerate(perm, start=1):
        d = v - i
        if -dt <= d <= dt:
            counts[d] += 1
    return DisplacementDistribution(counts=dict(counts), total=len(perm), dt=dt)


def rcv_window_series(ids: Iterable[int], rcv_buffer: int) -> RcvWindowSeries:
    """Advertised window after each arrival: capacity minus buffer occupancy."""
    if isinstance(rcv_buffer, bool) or not isinstance(rcv_buffer, int) or rcv_buffer <= 0:
        raise InvalidParameterError(
            f"rcv_buffer must be a positive integer, got {rcv_buffer!r}"
        )
    occupancy = buffer_sizes(ids)
    for pos, m in enumerate(occupancy, start=1):
        if m > rcv_buffer:
            raise CapacityExceededError(
                f"buffer occupancy {m} exceeds capacity {rcv_buffer} at position {pos}",
                position=pos,
            )
    return RcvWindowSeries(
        rcv_buffer=rcv_buffer, values=tuple(rcv_buffer - m for m in occupancy)
    )


def mean_buffer_size(ids: Iterable[int]) -> Fraction:
    """Average buffer occupancy, exact; a function of the buffer series only."""
    values = buffer_sizes(ids)
    if not values:
        return Fraction(0)
    return Fraction(sum(values), len(values))


def consistency_counterexample(
    metric: Callable[[tuple[int, ...]], object], n: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search S_n for a buffer-equivalent pair that the metric tells apart.

    Permutations are enumerated in lexicographic order and the first
    offending pair is returned (earlier permutation first), so the result is
    reproducible.  Returns None when the metric is consistent at this length.
    Metric values must support exact equality.
    """
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_CONSISTENCY_N:
        raise InvalidParameterError(
            f"n must be an integer in 1..{MAX_CONSISTENCY_N}, got {n!r}"
        )
    seen: dict[tuple[int, ...], list[tuple[tuple[int, ...], object]]] = {}
    for perm in permutations(range(1, n + 1)):
        key = buffer_sizes(perm)
        value = metric(perm)
        for earlier, earlier_value in seen.get(key, ()):
            if earlier_value != value:
                return earlier, perm
        seen.setdefault(key, []).append((perm, value))
    return None
