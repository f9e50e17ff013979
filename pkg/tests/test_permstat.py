from itertools import permutations

import pytest

from dropsize.permstat import (
    des, des_b, descent_set, descent_set_b, insert_end, maxdrop, maxdrop_b,
    parse_permutation, parse_signed_permutation, remove_end, standardize,
)


def perm(s):
    return parse_permutation(s)


@pytest.mark.parametrize("text, expected", [
    ("12345", set()),
    ("32145", {1, 2}),
    ("12354", {4}),
])
def test_descent_set(text, expected):
    assert descent_set(perm(text)) == expected


@pytest.mark.parametrize("text, expected", [("12345", 0), ("12354", 1), ("54321", 4)])
def test_des(text, expected):
    assert des(perm(text)) == expected


def test_empty_permutation():
    assert des(()) == 0
    assert descent_set(()) == frozenset()
    with pytest.raises(ValueError):
        maxdrop(())


@pytest.mark.parametrize("text, expected", [("123456", 0), ("12354", 1), ("45213", 3)])
def test_maxdrop(text, expected):
    # 45213 drops by 3 at position 4
    assert maxdrop(perm(text)) == expected


@pytest.mark.parametrize("pi, expected", [((1, 2), set()), ((-1, 2), {0}), ((-1, -2), {0, 1})])
def test_descent_set_b(pi, expected):
    assert descent_set_b(pi) == expected


@pytest.mark.parametrize("pi, expected", [((1,), 0), ((-1,), 1), ((2, -1), 1)])
def test_des_b(pi, expected):
    assert des_b(pi) == expected


@pytest.mark.parametrize("pi, expected", [((1, 2, 3, 4), 0), ((-1, 2), 1), ((2, -1), 2)])
def test_maxdrop_b(pi, expected):
    assert maxdrop_b(pi) == expected


class TestInsertRemove:
    def test_example(self):
        assert insert_end(perm("3421"), 3) == perm("45213")

    def test_into_empty(self):
        assert insert_end((), 1) == (1,)

    def test_middle_value(self):
        assert insert_end(perm("1234"), 3) == perm("12453")

    @pytest.mark.parametrize("i", [0, 6])
    def test_out_of_range(self, i):
        with pytest.raises(ValueError):
            insert_end(perm("1234"), i)

    @pytest.mark.parametrize("mu, expected", [
        ("45213", ("3421", 3)),
        ("1", ("", 1)),
        ("12354", ("1234", 4)),
    ])
    def test_remove(self, mu, expected):
        prefix, last = expected
        assert remove_end(perm(mu)) == (parse_permutation(prefix), last)

    def test_remove_from_empty(self):
        with pytest.raises(ValueError):
            remove_end(())


def all_perms(max_n):
    for n in range(max_n + 1):
        yield from permutations(range(1, n + 1))


def test_round_trip_exhaustive():
    for pi in all_perms(8):
        for i in range(1, len(pi) + 2):
            assert remove_end(insert_end(pi, i)) == (pi, i)


def test_insertion_adds_descent_iff_last_entry_at_least_i():
    for pi in all_perms(7):
        if not pi:
            continue
        for i in range(1, len(pi) + 2):
            bump = 1 if pi[-1] >= i else 0
            assert des(insert_end(pi, i)) == des(pi) + bump


def test_insertion_never_lowers_old_entries():
    # so the drops at the first n positions cannot grow
    for pi in all_perms(7):
        for i in range(1, len(pi) + 2):
            mu = insert_end(pi, i)
            assert all(a >= b for a, b in zip(mu, pi))


def test_signed_maxdrop_agrees_on_positive_entries():
    for pi in all_perms(7):
        if pi:
            assert maxdrop_b(pi) == maxdrop(pi)


def test_standardize():
    assert standardize((5, 2, 9)) == (2, 1, 3)


class TestParsing:
    @pytest.mark.parametrize("text", ["4 5 2 1 3", "4,5,2,1,3", "45213", " 4, 5 2,1 3 "])
    def test_forms(self, text):
        assert parse_permutation(text) == (4, 5, 2, 1, 3)

    @pytest.mark.parametrize("text", ["1 1", "0 1", "1 3", "a b"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_permutation(text)

    def test_signed(self):
        assert parse_signed_permutation("-1 2") == (-1, 2)
        assert parse_signed_permutation("2,-1") == (2, -1)
        with pytest.raises(ValueError):
            parse_signed_permutation("-1 1")
