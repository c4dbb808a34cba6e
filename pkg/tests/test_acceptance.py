"""Acceptance suite: one test per shipping criterion.

Run with ``pytest -v tests/test_acceptance.py`` to get one pass/fail line
per criterion.  Each test also prints an ``ACCEPTANCE n: PASS`` line that
shows up under ``-s`` or ``-rP``.
"""

import math
import random
import subprocess
import sys
from functools import partial
from itertools import permutations

from reorderlab import (
    ack_from_buffer,
    ack_sequence,
    buffer_sizes,
    consistency_counterexample,
    enumerate_classes,
    lds_bruteforce,
    mean_buffer_size,
    reconstruct,
    reorder_density,
    segment_episodes,
    sus,
    sus_partition,
    verify_theorem,
)

from _oracles import interleave_runs

TRACE_14 = (1, 2, 3, 6, 5, 7, 4, 8, 9, 10, 12, 13, 14, 11)


def cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "reorderlab", *args],
        input=stdin,
        capture_output=True,
        timeout=120,
    )


def test_criterion_1_worked_examples():
    assert buffer_sizes((4, 3, 2, 1)) == (4, 4, 4, 0)
    assert ack_sequence((4, 3, 2, 1)) == (1, 1, 1, 5)

    part = sus_partition((6, 5, 8, 7, 10, 9, 12, 11, 4, 3, 2))
    assert part.sus == 5
    assert part.lists == ((6, 8, 10, 12), (5, 7, 9, 11), (4,), (3,), (2,))

    assert segment_episodes(TRACE_14).pivot_packets == frozenset(
        {1, 2, 3, 4, 8, 9, 10, 11}
    )

    reverse = reorder_density((4, 3, 2, 1), math.inf)
    assert reverse.counts == {-3: 1, -1: 1, 1: 1, 3: 1}
    assert reverse.total == 4
    swapped = reorder_density((4, 2, 3, 1), math.inf)
    assert swapped.counts == {-3: 1, 0: 2, 3: 1}
    assert swapped.total == 4
    print("ACCEPTANCE 1: PASS - worked examples reproduced exactly")


def test_criterion_2_uniqueness_exhaustive():
    for n in range(1, 9):
        assert verify_theorem(n) is None, f"collision among low-disorder perms at n={n}"
    print("ACCEPTANCE 2: PASS - no low-disorder collisions for n=1..8")


def test_criterion_3_sharpness_at_four():
    report = enumerate_classes(4)
    members = report.classes[(4, 4, 4, 0)]
    assert set(members) == {(4, 3, 2, 1), (4, 2, 3, 1)}
    assert {sus(p) for p in members} == {4, 3}
    print("ACCEPTANCE 3: PASS - (4,4,4,0) class is the documented two-member witness")


def test_criterion_4_round_trip():
    checked = 0
    for n in range(9):
        for p in permutations(range(1, n + 1)):
            if sus(p) <= 3:
                assert reconstruct(buffer_sizes(p)) == p
                checked += 1

    rng = random.Random(20260817)
    for _ in range(1000):
        perm = interleave_runs(100, 3, rng)
        assert sus(perm) <= 3
        assert reconstruct(buffer_sizes(perm)) == perm
    print(
        f"ACCEPTANCE 4: PASS - round trip on {checked} exhaustive perms"
        " and 1000 random length-100 perms"
    )


def test_criterion_5_greedy_equals_brute_force():
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            assert sus_partition(p).sus == lds_bruteforce(p)

    rng = random.Random(4099)
    for _ in range(1000):
        n = rng.randint(1, 64)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert sus_partition(perm).sus == lds_bruteforce(perm)
    print("ACCEPTANCE 5: PASS - greedy list count equals brute-force LDS")


def test_criterion_6_behavioral_equivalence():
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            assert ack_from_buffer(buffer_sizes(p)) == ack_sequence(p)

    for n in range(1, 8):
        report = enumerate_classes(n)
        for group in report.classes.values():
            if len(group) > 1:
                acks = {ack_sequence(p) for p in group}
                assert len(acks) == 1
    print(
        "ACCEPTANCE 6: PASS - buffer series determines ACK series;"
        " equal-buffer classes behave identically"
    )


def test_criterion_7_rd_inconsistency():
    for dt in (1, 2, 3, math.inf):
        witness = consistency_counterexample(partial(reorder_density, dt=dt), 4)
        assert witness is not None, f"rd with dt={dt} wrongly looks consistent"
        a, b = witness
        assert buffer_sizes(a) == buffer_sizes(b)
        assert reorder_density(a, dt) != reorder_density(b, dt)
        assert set(witness) == {(4, 3, 2, 1), (4, 2, 3, 1)}

    for n in range(1, 7):
        assert consistency_counterexample(mean_buffer_size, n) is None
    print(
        "ACCEPTANCE 7: PASS - displacement metric inconsistent at every"
        " threshold; buffer-derived mean consistent for n<=6"
    )


def test_criterion_8_cli_contract():
    got = cli("reconstruct", "4 4 4 0")
    assert got.stdout == b"4 2 3 1\n"
    assert got.returncode == 0

    got = cli("reconstruct", "1")
    assert got.stdout == b"NO PERMUTATION EXISTS\n"
    assert got.returncode == 1

    got = cli("consistency", "--metric", "rd", "--dt", "inf", "--n", "4")
    assert got.stdout == b"inconsistent\nwitness-a 4 2 3 1\nwitness-b 4 3 2 1\n"
    assert got.returncode == 1

    trace_text = " ".join(str(v) for v in TRACE_14)
    mapped = cli("map", trace_text)
    assert mapped.returncode == 0
    rebuilt = cli("reconstruct", "-", stdin=mapped.stdout)
    assert rebuilt.returncode == 0
    assert rebuilt.stdout.split() == [str(v).encode() for v in TRACE_14]
    print("ACCEPTANCE 8: PASS - CLI outputs and exit codes match; pipe round-trips")
