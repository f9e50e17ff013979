"""Type A descent polynomials restricted by maximum drop.

Polynomials in ``y`` (descent generating functions) and in ``x`` (the
``P_k``, ``Q_k``, ``R_{n,k}`` family) share :class:`IntLaurentPoly`; the
variable name only matters when rendering.

>>> restricted_descent_poly_a(3, 1).to_text("y")
'1 + 3y'
>>> q_poly(1).to_text()
'x + x^2'
"""

from __future__ import annotations

from functools import cache
from math import comb

from .enumeration import DescentTable, RefinedTable, oracle_refined_table_a
from .exactpoly import IntLaurentPoly, Window, geometric_sum, is_window_symmetric, substitute_power

__all__ = [
    "eulerian_poly_a", "restricted_descent_poly_a",
    "p_poly", "q_poly", "r_poly", "ek_counts_via_pk",
    "refined_count_e", "refined_count_ek",
    "q_identity_rhs", "r_identity_rhs",
    "check_q_identity", "check_r_identity", "check_r_symmetry", "r_symmetry_window",
    "binomial_recurrence_row", "drop_sum",
]

Y_MINUS_1 = IntLaurentPoly([-1, 1])


def binomial_recurrence_row(k: int, lower: list[IntLaurentPoly]) -> IntLaurentPoly:
    """``sum_{i=1}^{k+1} C(k+1, i) (y-1)^(i-1) lower[-i]``.

    ``lower`` holds at least the ``k + 1`` previous terms, most recent last.
    Shared by the type A and type B recurrences.
    """
    acc = IntLaurentPoly.zero()
    shift = IntLaurentPoly.one()
    for i in range(1, k + 2):
        acc = acc + comb(k + 1, i) * shift * lower[-i]
        shift = shift * Y_MINUS_1
    return acc


@cache
def eulerian_poly_a(n: int) -> IntLaurentPoly:
    """``A_n(y)``, constant term 1. Built from the drop recurrence at its base row,
    where ``A_{m} = sum_{i=1}^{m} C(m, i) (y-1)^(i-1) A_{m-i}``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return IntLaurentPoly.one()
    lower = [eulerian_poly_a(m) for m in range(n)]
    return binomial_recurrence_row(n - 1, lower)


@cache
def _restricted_a_row(k: int, upto: int) -> tuple[IntLaurentPoly, ...]:
    row = [eulerian_poly_a(m) for m in range(min(k, upto) + 1)]
    for m in range(k + 1, upto + 1):
        row.append(binomial_recurrence_row(k, row))
    return tuple(row)


def restricted_descent_poly_a(n: int, k: int) -> IntLaurentPoly:
    """``A_{n,k}(y)``: descents over permutations of [n] with maxdrop <= k."""
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    if n <= k:
        return eulerian_poly_a(n)
    return _restricted_a_row(k, n)[n]


def drop_sum(k: int, euler, step: int, tail_exponent) -> IntLaurentPoly:
    """``sum_{l=0}^{k} E_{k-l}(x^step) (x^step - 1)^l sum_{s=l}^{k} C(s, l) x^{tail_exponent(s)}``.

    ``euler`` is the Eulerian family (type A or B); ``step`` may be negative.
    Every one of ``P_k``, ``T_k``, ``F_k`` and the halves of ``H_k``/``G_k``
    is an instance.
    """
    base = substitute_power(IntLaurentPoly([-1, 1]), step)  # x^step - 1
    acc = IntLaurentPoly.zero()
    for l in range(k + 1):
        tail = IntLaurentPoly.from_terms((tail_exponent(s), comb(s, l)) for s in range(l, k + 1))
        acc = acc + substitute_power(euler(k - l), step) * base ** l * tail
    return acc


@cache
def p_poly(k: int) -> IntLaurentPoly:
    """``P_k(x)``, kept as a Laurent polynomial."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return drop_sum(k, eulerian_poly_a, k + 1, lambda s: -s)


def q_poly(k: int) -> IntLaurentPoly:
    """``Q_k(x) = x^k P_k(x)``; an ordinary polynomial."""
    q = p_poly(k).shift(k)
    if not q.is_zero() and q.min_degree < 0:
        raise ArithmeticError(f"Q_{k} has negative exponents: {q!r}")
    return q


def r_poly(n: int, k: int) -> IntLaurentPoly:
    """``R_{n,k}(x) = Q_k(x) (1 + x + ... + x^k)^(n-k)``; requires ``n >= k``."""
    if k < 0 or n < k:
        raise ValueError(f"R_(n,k) needs n >= k >= 0, got n={n}, k={k}")
    return q_poly(k) * geometric_sum(k) ** (n - k)


def ek_counts_via_pk(n: int, k: int) -> DescentTable:
    """E^k(n, d) read off the coefficients of ``x^((k+1)d)`` in ``P_k (1+...+x^k)^(n-k)``."""
    if k < 0 or n < k:
        raise ValueError(f"needs n >= k >= 0, got n={n}, k={k}")
    series = p_poly(k) * geometric_sum(k) ** (n - k)
    if series.is_zero():
        return DescentTable()
    top = series.max_degree // (k + 1)
    return DescentTable({d: series.coefficient((k + 1) * d) for d in range(top + 1)})


def _check_last(n: int, j: int):
    if not 1 <= j <= n:
        raise ValueError(f"last entry must lie in [1, {n}], got {j}")


def refined_count_e(n: int, i: int, j: int) -> int:
    """Permutations of [n] with ``i`` descents ending in ``j``."""
    _check_last(n, j)
    return oracle_refined_table_a(n)[i, j]


def refined_count_ek(n: int, k: int, i: int, j: int) -> int:
    """As :func:`refined_count_e`, restricted to maxdrop <= k."""
    _check_last(n, j)
    return oracle_refined_table_a(n, k)[i, j]


def q_identity_rhs(n: int) -> IntLaurentPoly:
    """``sum_{i,j} E(n+1, i; j+1) x^((n+1)i + j)`` from enumeration."""
    table: RefinedTable = oracle_refined_table_a(n + 1)
    return IntLaurentPoly.from_terms(
        ((n + 1) * i + j, table[i, j + 1]) for i in range(n + 1) for j in range(n + 1)
    )


def r_identity_rhs(n: int, k: int) -> IntLaurentPoly:
    """``sum_{i<=n, j<=k} E^k(n+1, i; n+1-k+j) x^((k+1)i + j)`` from enumeration."""
    table = oracle_refined_table_a(n + 1, k)
    return IntLaurentPoly.from_terms(
        ((k + 1) * i + j, table[i, n + 1 - k + j]) for i in range(n + 1) for j in range(k + 1)
    )


def check_q_identity(n: int) -> bool:
    return q_poly(n) == q_identity_rhs(n)


def check_r_identity(n: int, k: int) -> bool:
    return r_poly(n, k) == r_identity_rhs(n, k)


def r_symmetry_window(n: int, k: int) -> Window:
    return Window(0, (n + 2) * k)


def check_r_symmetry(n: int, k: int, *, counts: bool = True) -> bool:
    """``R_{n,k}`` is palindromic on ``[0, (n+2)k]``.

    With ``counts=True`` the pairing is also checked on enumerated refined
    counts of A_{n+1,k}: cells ``r = (k+1)i + j`` and ``r'`` with
    ``r + r' = (n+2)k`` carry equal counts.
    """
    window = r_symmetry_window(n, k)
    r = r_poly(n, k)
    if not window.contains(r) or not is_window_symmetric(r, window):
        return False
    if not counts:
        return True
    m = n + 1
    table = oracle_refined_table_a(m, k)
    for i in range(m):
        for j in range(k + 1):
            rp = (m + 1) * k - (k + 1) * i - j
            ip, jp = divmod(rp, k + 1)
            if not 0 <= ip <= m - 1:
                if table[i, m - k + j]:
                    return False
                continue
            if table[i, m - k + j] != table[ip, m - k + jp]:
                return False
    return True
