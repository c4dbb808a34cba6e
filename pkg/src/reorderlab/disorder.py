"""Disorder measures: greedy ascending-list partition and its brute-force twin.

SUS (shuffled up-sequences) is the minimum number of ascending subsequences a
sequence can be split into; it coincides with the length of the longest
strictly decreasing subsequence.  Both directions are implemented so each can
check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .buffering import check_ids


@dataclass(frozen=True)
class SusPartition:
    """Greedy partition of a sequence into strictly ascending lists.

    The lists' last elements stay in decreasing order across the partition,
    so the list count equals the longest-decreasing-subsequence length.
    """

    lists: tuple[tuple[int, ...], ...]

    @property
    def sus(self) -> int:
        """Number of lists, i.e. the SUS (equivalently LDS) value."""
        return len(self.lists)


def sus_partition(ids: Iterable[int]) -> SusPartition:
    """Scatter elements left to right onto ascending lists, greedily.

    Each element extends the first list whose last element is smaller; if no
    list qualifies it opens a new one.
    """
    ids = check_ids(ids)
    lists: list[list[int]] = []
    for p in ids:
        for lst in lists:
            if lst[-1] < p:
                lst.append(p)
                break
        else:
            lists.append([p])
    return SusPartition(tuple(tuple(lst) for lst in lists))


def sus(ids: Iterable[int]) -> int:
    """SUS of a sequence: minimum number of ascending subsequences covering it."""
    return sus_partition(ids).sus


def lds_bruteforce(ids: Iterable[int]) -> int:
    """Longest strictly decreasing subsequence length, by quadratic DP.

    Shares no machinery with the greedy partition; serves as its oracle.
    """
    ids = check_ids(ids)
    if not ids:
        return 0
    best = [1] * len(ids)
    for i, v in enumerate(ids):
        for j in range(i):
            if ids[j] > v and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best)
