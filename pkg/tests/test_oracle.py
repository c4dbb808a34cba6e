"""Exhaustive small-length enumeration and verification engine."""

from itertools import permutations

import pytest

from reorderlab import (
    InvalidParameterError,
    buffer_sizes,
    enumerate_classes,
    reconstruct,
    sus,
    verify_identities,
    verify_theorem,
)


class TestEnumerateClasses:
    def test_single_packet(self):
        report = enumerate_classes(1)
        assert report.class_count == 1
        assert report.classes == {(0,): ((1,),)}
        assert report.max_class_size == 1
        assert report.multi_member_count == 0
        assert report.sus3_collision_count == 0

    def test_length_four_collision_class(self):
        report = enumerate_classes(4)
        assert report.classes[(4, 4, 4, 0)] == ((4, 2, 3, 1), (4, 3, 2, 1))
        assert {sus(p) for p in report.classes[(4, 4, 4, 0)]} == {3, 4}
        assert report.sus3_collision_count == 0
        assert report.multi_member_count >= 1

    def test_classes_partition_all_permutations(self):
        report = enumerate_classes(4)
        members = [p for group in report.classes.values() for p in group]
        assert sorted(members) == sorted(tuple(p) for p in permutations(range(1, 5)))
        for key, group in report.classes.items():
            for p in group:
                assert buffer_sizes(p) == key

    def test_keys_reconstructable_when_low_disorder(self):
        for n in range(1, 7):
            report = enumerate_classes(n)
            for key, group in report.classes.items():
                low = [p for p in group if sus(p) <= 3]
                if low:
                    assert len(low) == 1
                    assert reconstruct(key) == low[0]

    def test_deterministic(self):
        assert enumerate_classes(5) == enumerate_classes(5)

    @pytest.mark.parametrize("n", [0, -1, 10])
    def test_guard(self, n):
        with pytest.raises(InvalidParameterError):
            enumerate_classes(n)


class TestVerifyTheorem:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_passes(self, n):
        assert verify_theorem(n) is None

    @pytest.mark.parametrize("n", [0, 10])
    def test_guard(self, n):
        with pytest.raises(InvalidParameterError):
            verify_theorem(n)


class TestVerifyIdentities:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_passes(self, n):
        assert verify_identities(n) is None

    @pytest.mark.parametrize("n", [0, 8])
    def test_guard(self, n):
        with pytest.raises(InvalidParameterError):
            verify_identities(n)
