from math import comb, factorial

import pytest

from dropsize.enumeration import DescentTable, oracle_descent_table_a
from dropsize.exactpoly import IntLaurentPoly, Window, is_unimodal, is_window_symmetric
from dropsize.typea import (
    check_q_identity, check_r_identity, check_r_symmetry, ek_counts_via_pk, eulerian_poly_a,
    p_poly, q_poly, r_poly, r_symmetry_window, refined_count_e, refined_count_ek,
    restricted_descent_poly_a,
)

P = IntLaurentPoly


def poly(terms):
    return P.from_terms(terms)


def eulerian_closed_form(n, d):
    # classical alternating sum, independent of every recurrence in the package
    return sum((-1) ** j * comb(n + 1, j) * (d + 1 - j) ** n for j in range(d + 1))


@pytest.mark.parametrize("n, coeffs", [(0, [1]), (2, [1, 1]), (3, [1, 4, 1])])
def test_eulerian_examples(n, coeffs):
    assert eulerian_poly_a(n) == P(coeffs)


@pytest.mark.parametrize("n", range(1, 16))
def test_eulerian_matches_closed_form(n):
    assert eulerian_poly_a(n) == P([eulerian_closed_form(n, d) for d in range(n)])


@pytest.mark.parametrize("n", range(13))
def test_eulerian_total(n):
    assert eulerian_poly_a(n)(1) == factorial(n)


class TestRestricted:
    def test_a31(self):
        assert restricted_descent_poly_a(3, 1) == P([1, 3])

    @pytest.mark.parametrize("n, k", [(3, 2), (4, 3), (4, 7), (0, 0)])
    def test_unrestricted_when_k_large(self, n, k):
        assert restricted_descent_poly_a(n, k) == eulerian_poly_a(n)

    def test_identity_only(self):
        assert restricted_descent_poly_a(5, 0) == P.one()

    def test_nonnegative_and_total(self):
        for n in range(1, 13):
            for k in range(n):
                p = restricted_descent_poly_a(n, k)
                assert all(c >= 0 for c in p.coeffs)
                assert p(1) == factorial(k) * (k + 1) ** (n - k)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            restricted_descent_poly_a(-1, 0)
        with pytest.raises(ValueError):
            restricted_descent_poly_a(3, -1)

    def test_triple_agreement_small(self):
        for n in range(1, 8):
            for k in range(n):
                rec = DescentTable.from_poly(restricted_descent_poly_a(n, k))
                assert rec == oracle_descent_table_a(n, k) == ek_counts_via_pk(n, k)


class TestPQR:
    @pytest.mark.parametrize("k, expected", [
        (0, {0: 1}),
        (1, {0: 1, 1: 1}),
        (2, {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}),
    ])
    def test_p(self, k, expected):
        assert p_poly(k) == poly(expected)

    @pytest.mark.parametrize("k, expected", [
        (0, {0: 1}),
        (1, {1: 1, 2: 1}),
        (2, {2: 1, 3: 1, 4: 2, 5: 1, 6: 1}),
    ])
    def test_q(self, k, expected):
        assert q_poly(k) == poly(expected)

    def test_q_nonnegative_support(self):
        for k in range(13):
            assert q_poly(k).min_degree >= 0

    def test_p_negative_powers_cancel(self):
        # observed, not assumed: every x^-s term cancels and the constant term is 1
        for k in range(13):
            p = p_poly(k)
            assert p.min_degree == 0 and p.coefficient(0) == 1

    @pytest.mark.parametrize("k", range(11))
    def test_p_unimodal(self, k):
        q = q_poly(k)
        assert is_unimodal(q, Window(0, k * (k + 2)))

    def test_r_examples(self):
        assert r_poly(2, 1) == poly({1: 1, 2: 2, 3: 1})
        assert r_poly(2, 0) == P.one()
        assert r_poly(3, 3) == q_poly(3)

    def test_r_requires_n_at_least_k(self):
        with pytest.raises(ValueError):
            r_poly(1, 2)

    def test_counts_via_p(self):
        assert ek_counts_via_pk(3, 1) == DescentTable({0: 1, 1: 3})
        assert ek_counts_via_pk(5, 0) == DescentTable({0: 1})
        assert ek_counts_via_pk(4, 4) == DescentTable.from_poly(eulerian_poly_a(4))


class TestRefinedCounts:
    def test_examples(self):
        assert refined_count_e(2, 0, 2) == 1
        assert refined_count_e(3, 1, 2) == 2
        assert refined_count_ek(3, 1, 1, 2) == 2

    @pytest.mark.parametrize("j", [0, 4])
    def test_j_range(self, j):
        with pytest.raises(ValueError):
            refined_count_e(3, 1, j)


class TestIdentities:
    @pytest.mark.parametrize("n", range(8))
    def test_q_identity(self, n):
        assert check_q_identity(n)

    def test_r_identity_and_symmetry(self):
        for n in range(8):
            for k in range(n + 1):
                assert check_r_identity(n, k), (n, k)
                assert check_r_symmetry(n, k), (n, k)

    def test_symmetry_window_examples(self):
        assert r_symmetry_window(2, 1) == Window(0, 4)
        assert is_window_symmetric(r_poly(2, 1), r_symmetry_window(2, 1))
        assert is_window_symmetric(q_poly(2), Window(0, 8))
        assert is_window_symmetric(r_poly(4, 0), Window(0, 0))

    def test_off_center_window_is_not_symmetric(self):
        # sanity: the symmetry check is not vacuous
        assert not is_window_symmetric(r_poly(2, 1), Window(0, 5))


def test_caches_return_equal_values():
    assert eulerian_poly_a(9) is eulerian_poly_a(9)
    assert restricted_descent_poly_a(9, 3) == restricted_descent_poly_a(9, 3)
