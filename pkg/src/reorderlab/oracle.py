"""Exhaustive small-length verification of the package's structural claims.

Everything here enumerates entire permutation groups, so lengths are capped
to keep runs at desk scale.  All results are deterministic: enumeration is
lexicographic and the first witness found is the one reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .buffering import ack_from_buffer, ack_sequence, buffer_sizes
from .disorder import lds_bruteforce, sus
from .errors import InvalidParameterError
from .reconstruct import MAX_SUS, reconstruct

MAX_ENUMERATION_N = 9
MAX_IDENTITY_N = 7


def _check_n(n: int, limit: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= limit:
        raise InvalidParameterError(f"n must be an integer in 1..{limit}, got {n!r}")


@dataclass
class EquivalenceClassReport:
    """Grouping of all length-n permutations by their buffer series.

    ``classes`` maps each buffer series to its members in lexicographic
    order.  ``sus3_collision_count`` counts classes holding two or more
    members of SUS at most 3; uniqueness of mildly-disordered preimages
    means it must be zero.
    """

    n: int
    classes: dict[tuple[int, ...], tuple[tuple[int, ...], ...]]
    class_count: int
    max_class_size: int
    multi_member_count: int
    sus3_collision_count: int


@dataclass(frozen=True)
class IdentityViolation:
    """First permutation on which a cross-check failed, and which check."""

    permutation: tuple[int, ...]
    check: str


def enumerate_classes(n: int) -> EquivalenceClassReport:
    """Group S_n by buffer series, with summary statistics."""
    _check_n(n, MAX_ENUMERATION_N)
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for perm in permutations(range(1, n + 1)):
        classes.setdefault(buffer_sizes(perm), []).append(perm)
    frozen = {key: tuple(members) for key, members in classes.items()}
    sizes = [len(members) for members in frozen.values()]
    collisions = sum(
        1
        for members in frozen.values()
        if sum(1 for p in members if sus(p) <= MAX_SUS) >= 2
    )
    return EquivalenceClassReport(
        n=n,
        classes=frozen,
        class_count=len(frozen),
        max_class_size=max(sizes),
        multi_member_count=sum(1 for s in sizes if s >= 2),
        sus3_collision_count=collisions,
    )


def verify_theorem(n: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Check that no two distinct SUS<=3 permutations share a buffer series.

    Returns None when uniqueness holds on all of S_n, otherwise the first
    colliding pair found in lexicographic order (which would indicate an
    implementation bug, not a counterexample to the underlying claim).
    """
    _check_n(n, MAX_ENUMERATION_N)
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for perm in permutations(range(1, n + 1)):
        if sus(perm) > MAX_SUS:
            continue
        key = buffer_sizes(perm)
        if key in seen:
            return seen[key], perm
        seen[key] = perm
    return None


def verify_identities(n: int) -> IdentityViolation | None:
    """Exhaustively cross-check the structural identities on S_n.

    Per permutation: the highest ID seen equals ACK plus buffer size minus
    one at every step; greedy SUS equals brute-force LDS; the ACK series is
    recoverable from the buffer series alone; and SUS<=3 permutations
    round-trip through reconstruction.  Returns None, or the first violation.
    """
    _check_n(n, MAX_IDENTITY_N)
    for perm in permutations(range(1, n + 1)):
        m = buffer_sizes(perm)
        acks = ack_sequence(perm)
        highest = 0
        for i in range(n):
            if perm[i] > highest:
                highest = perm[i]
            if highest != acks[i] + m[i] - 1:
                return IdentityViolation(perm, "highest-vs-ack")
        u = sus(perm)
        if u != lds_bruteforce(perm):
            return IdentityViolation(perm, "sus-vs-lds")
        if ack_from_buffer(m) != acks:
            return IdentityViolation(perm, "ack-from-buffer")
        if u <= MAX_SUS and reconstruct(m) != perm:
            return IdentityViolation(perm, "reconstruct-round-trip")
    return None
