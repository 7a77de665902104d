from math import factorial

import pytest

from forest_patterns import (
    Composition,
    FamilyTag,
    ListPartition,
    SetPartition,
    bell,
    binom,
    catalan,
    count_forests,
    gen_compositions,
    gen_forests,
    gen_list_partitions,
    gen_ordered_cycle_decomps,
    gen_ordered_set_partitions,
    gen_partitioned_cycle_decomps,
    gen_set_partitions,
    iter_parent_vectors,
    stirling1,
    stirling2,
)
from forest_patterns.generate import satisfies_family


class TestForestStreams:
    def test_small_counts(self):
        assert len(list(gen_forests(2, FamilyTag.UNORDERED))) == 3
        assert len(list(gen_forests(2, FamilyTag.ORDERED))) == 4
        assert len(list(gen_forests(3, FamilyTag.UNORDERED_BINARY))) == 15

    def test_empty_ground(self):
        for family in FamilyTag:
            assert len(list(gen_forests(0, family))) == 1

    @pytest.mark.parametrize("n", range(0, 7))
    def test_unordered_total(self, n):
        assert count_forests(n, FamilyTag.UNORDERED) == (n + 1) ** max(n - 1, 0)

    @pytest.mark.parametrize("n", range(0, 5))
    def test_ordered_total(self, n):
        expected = factorial(n) * catalan(n)
        assert count_forests(n, FamilyTag.ORDERED) == expected
        assert len(list(gen_forests(n, FamilyTag.ORDERED))) == expected

    @pytest.mark.parametrize("family", list(FamilyTag))
    def test_no_duplicates_and_family_membership(self, family):
        top = 6 if family is not FamilyTag.ORDERED else 5
        for n in range(0, top):
            seen = set()
            for f in gen_forests(n, family):
                assert f not in seen
                seen.add(f)
                assert satisfies_family(f, family)

    def test_determinism(self):
        a = list(gen_forests(4, FamilyTag.ORDERED))
        b = list(gen_forests(4, FamilyTag.ORDERED))
        assert a == b

    def test_lexicographic_parent_vectors(self):
        vecs = list(iter_parent_vectors(3))
        assert vecs == sorted(vecs)
        assert len(vecs) == 16

    def test_prefix_slices_partition_the_space(self):
        whole = list(iter_parent_vectors(4))
        sliced = [
            v for j in range(5) if j != 1 for v in iter_parent_vectors(4, first_parent=j)
        ]
        assert sorted(sliced) == whole

    def test_binary_restricts_virtual_root_too(self):
        tri_root = tuple(f.roots for f in gen_forests(3, FamilyTag.UNORDERED_BINARY))
        assert (1, 2, 3) not in tri_root


class TestSetPartitions:
    def test_bell_counts(self):
        assert len(list(gen_set_partitions(3))) == 5
        for n in range(0, 9):
            assert len(list(gen_set_partitions(n))) == bell(n)

    def test_blocks_sorted_by_minimum(self):
        for sp in gen_set_partitions(4):
            mins = [b[0] for b in sp.blocks]
            assert mins == sorted(mins)

    def test_ordered_count(self):
        for n in range(0, 6):
            expected = sum(factorial(k) * stirling2(n, k) for k in range(n + 1))
            assert len(list(gen_ordered_set_partitions(n))) == max(expected, 1)

    def test_rejects_overlap(self):
        with pytest.raises(ValueError):
            SetPartition([(1, 2), (2, 3)])


class TestCompositions:
    def test_known_compositions_of_ten(self):
        parts = {c.parts for c in gen_compositions(10)}
        assert (3, 3, 4) in parts and (3, 4, 3) in parts and (2, 2, 1, 4, 1) in parts

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts(self, n):
        assert len(list(gen_compositions(n))) == 2 ** (n - 1)
        for k in range(1, n + 1):
            assert len(list(gen_compositions(n, k))) == binom(n - 1, k - 1)

    def test_rejects_zero_parts(self):
        with pytest.raises(ValueError):
            Composition([2, 0, 1])


class TestListPartitions:
    def test_orderings_distinguished(self):
        a = ListPartition([(1, 6), (2,), (3, 4, 5)])
        b = ListPartition([(6, 1), (2,), (3, 5, 4)])
        assert a != b

    def test_reverse_identification(self):
        base = ListPartition([(1, 2), (3, 4, 5)], ordered_blocks=True, up_to_reverse=True)
        assert base == ListPartition([(2, 1), (3, 4, 5)], True, True)
        assert base == ListPartition([(2, 1), (5, 4, 3)], True, True)
        assert base != ListPartition([(1, 2), (4, 3, 5)], True, True)
        assert base != ListPartition([(3, 4, 5), (1, 2)], True, True)

    def test_canonical_blocks_put_second_smallest_first(self):
        lp = ListPartition([(1, 3, 2)], up_to_reverse=True)
        assert lp.blocks == ((2, 3, 1),)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_plain_count(self, n):
        expected = sum(
            factorial(n) // factorial(k) * binom(n - 1, k - 1) for k in range(1, n + 1)
        )
        assert len(list(gen_list_partitions(n))) == expected

    def test_ordered_up_to_reverse_count_small(self):
        assert len(list(gen_list_partitions(3, ordered_blocks=True, up_to_reverse=True))) == 15

    @pytest.mark.parametrize("n", range(1, 6))
    def test_no_duplicates(self, n):
        for kwargs in (
            {},
            {"ordered_blocks": True, "up_to_reverse": True},
            {"up_to_reverse": True},
        ):
            items = list(gen_list_partitions(n, **kwargs))
            assert len(items) == len(set(items))


class TestCycleDecompositionStreams:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_ordered_count(self, n):
        expected = sum(factorial(k) * stirling1(n, k) for k in range(1, n + 1))
        items = list(gen_ordered_cycle_decomps(n))
        assert len(items) == expected
        assert len(set(items)) == expected

    @pytest.mark.parametrize("n", range(1, 6))
    def test_partitioned_count(self, n):
        expected = sum(bell(k) * stirling1(n, k) for k in range(1, n + 1))
        items = list(gen_partitioned_cycle_decomps(n))
        assert len(items) == expected
        assert len(set(items)) == expected

    def test_cycles_are_max_first(self):
        for cd in gen_ordered_cycle_decomps(4):
            for c in cd.cycles:
                assert c[0] == max(c)

    def test_supports_cover_ground(self):
        for cd in gen_partitioned_cycle_decomps(4):
            assert cd.support == (1, 2, 3, 4)
