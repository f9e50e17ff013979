import random
from math import factorial

import pytest

from dropsize.enumeration import (
    DescentTable, RefinedTable, descent_table, gen_bounded_perms, gen_bounded_signed_perms,
    gen_perms, gen_signed_perms, oracle_descent_table_a, oracle_descent_table_b,
    oracle_refined_table_a, refined_table,
)
from dropsize.permstat import des_b, maxdrop, maxdrop_b, parse_permutation


@pytest.mark.parametrize("n, count", [(0, 1), (3, 6), (8, 40320)])
def test_gen_perms_counts(n, count):
    assert sum(1 for _ in gen_perms(n)) == count


def test_gen_perms_lexicographic():
    perms = list(gen_perms(5))
    assert perms == sorted(perms)
    assert len(set(perms)) == 120


def test_bounds_enforced():
    with pytest.raises(ValueError):
        gen_perms(11)
    with pytest.raises(ValueError):
        gen_signed_perms(8)
    assert next(iter(gen_signed_perms(8, allow_large=True))) == (-8, -7, -6, -5, -4, -3, -2, -1)
    with pytest.raises(ValueError):
        gen_signed_perms(9, allow_large=True)


class TestBoundedPerms:
    def test_a31(self):
        assert list(gen_bounded_perms(3, 1)) == [parse_permutation(s) for s in ("123", "132", "213", "312")]

    def test_full_when_k_large(self):
        assert len(list(gen_bounded_perms(3, 2))) == 6

    def test_identity_only(self):
        assert list(gen_bounded_perms(5, 0)) == [(1, 2, 3, 4, 5)]

    def test_pruned_matches_filter(self):
        for n in range(9):
            for k in range(n + 1):
                assert list(gen_bounded_perms(n, k)) == list(gen_bounded_perms(n, k, method="filter"))

    def test_size_formula(self):
        # |A_{n,k}| = k! (k+1)^(n-k), cross-checked rather than trusted
        for n in range(10):
            for k in range(n + 1):
                assert sum(1 for _ in gen_bounded_perms(n, k)) == factorial(k) * (k + 1) ** (n - k)

    def test_sampled_members_satisfy_bound(self):
        rng = random.Random(7)
        for n, k in [(8, 3), (9, 5)]:
            for pi in gen_bounded_perms(n, k):
                if rng.random() < 0.01:
                    assert maxdrop(pi) <= k

    def test_bad_method(self):
        with pytest.raises(ValueError):
            gen_bounded_perms(3, 1, method="magic")


class TestSignedPerms:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 2), (2, 8)])
    def test_counts(self, n, count):
        assert sum(1 for _ in gen_signed_perms(n)) == count

    def test_full_group_size(self):
        for n in range(7):
            assert sum(1 for _ in gen_bounded_signed_perms(n, n)) == 2 ** n * factorial(n)

    def test_lexicographic(self):
        items = list(gen_signed_perms(3))
        assert items == sorted(items)
        assert len(set(items)) == 48

    def test_b10(self):
        assert list(gen_bounded_signed_perms(1, 0)) == [(1,)]

    def test_b11(self):
        assert sorted(gen_bounded_signed_perms(1, 1)) == [(-1,), (1,)]

    def test_b21(self):
        members = list(gen_bounded_signed_perms(2, 1))
        assert sorted(members) == sorted(pi for pi in gen_signed_perms(2) if maxdrop_b(pi) <= 1)
        assert len(members) == 4

    def test_pruned_matches_filter(self):
        for n in range(6):
            for k in range(n + 1):
                assert list(gen_bounded_signed_perms(n, k)) == list(gen_bounded_signed_perms(n, k, method="filter"))

    def test_sampled_members_satisfy_bound(self):
        rng = random.Random(11)
        for pi in gen_bounded_signed_perms(7, 3):
            if rng.random() < 0.01:
                assert maxdrop_b(pi) <= 3


class TestTables:
    def test_a31(self):
        assert descent_table(gen_bounded_perms(3, 1)) == DescentTable({0: 1, 1: 3})

    def test_s3(self):
        assert descent_table(gen_perms(3)) == DescentTable({0: 1, 1: 4, 2: 1})

    def test_b2(self):
        assert descent_table(gen_signed_perms(2), des_b) == DescentTable({0: 1, 1: 6, 2: 1})

    def test_tables_sum_to_cardinality(self):
        assert descent_table(gen_bounded_perms(6, 2)).total() == 2 * 3 ** 4

    def test_zero_counts_dropped(self):
        assert DescentTable({0: 1, 3: 0}) == DescentTable({0: 1})

    def test_refined_s2(self):
        assert refined_table(gen_perms(2)) == RefinedTable({(0, 2): 1, (1, 1): 1})

    def test_refined_a31(self):
        assert refined_table(gen_bounded_perms(3, 1)) == RefinedTable({(0, 3): 1, (1, 2): 2, (1, 3): 1})

    def test_refined_s3_cell(self):
        assert refined_table(gen_perms(3))[1, 2] == 2

    def test_joint_oracles_match_direct_tables(self):
        for n in range(1, 8):
            for k in range(n):
                assert oracle_descent_table_a(n, k) == descent_table(gen_bounded_perms(n, k))
                assert oracle_refined_table_a(n, k) == refined_table(gen_bounded_perms(n, k))
        for n in range(6):
            for k in range(n + 1):
                assert oracle_descent_table_b(n, k) == descent_table(gen_bounded_signed_perms(n, k), des_b)
