"""Type B descent polynomials restricted by maximum drop, and the coefficient
arrays used to show that ``T_k`` is unimodal.

Every polynomial family here (``T_k``, ``F_k``, ``H_k``, ``G_k`` and the two
halves of ``H_k``) is a :func:`~dropsize.typea.drop_sum` over the type B
Eulerian polynomials with a different substitution step and tail exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb, factorial

from .enumeration import DescentTable
from .exactpoly import IntLaurentPoly, Window, geometric_sum, substitute_power
from .typea import binomial_recurrence_row, drop_sum

__all__ = [
    "CoeffArray",
    "eulerian_poly_b", "restricted_descent_poly_b",
    "t_poly", "t_tilde_poly", "ekb_counts_via_tk",
    "f_poly", "h_poly", "h_prime_poly", "h_dprime_poly", "g_poly",
    "h_window", "t_tilde_window",
    "array_t", "array_h", "array_f", "array_g", "array_h_prime", "array_h_dprime",
    "check_construction_lemma", "check_insert_lemma", "check_g_construction",
    "check_h_symmetry", "check_h_recurrence", "check_entry_recurrences",
    "check_b_symmetry", "check_bsum_identity", "check_egf_identity",
    "bsum_sides", "egf_sides",
]

ONE_MINUS_T = IntLaurentPoly([1, -1])


@cache
def eulerian_poly_b(n: int) -> IntLaurentPoly:
    """``B_n(t)``, from the exponential generating function with the denominator
    cleared: ``B_n = (1-t)^n + t sum_{j=1}^n C(n,j) 2^j (1-t)^(j-1) B_{n-j}``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    acc = ONE_MINUS_T ** n
    t = IntLaurentPoly.monomial(1, 1)
    for j in range(1, n + 1):
        acc = acc + t * (comb(n, j) * 2 ** j) * ONE_MINUS_T ** (j - 1) * eulerian_poly_b(n - j)
    return acc


@cache
def _restricted_b_row(k: int, upto: int) -> tuple[IntLaurentPoly, ...]:
    row = [eulerian_poly_b(m) for m in range(min(k, upto) + 1)]
    for m in range(k + 1, upto + 1):
        row.append(binomial_recurrence_row(k, row))
    return tuple(row)


def restricted_descent_poly_b(n: int, k: int) -> IntLaurentPoly:
    """``B_{n,k}(y)``: type B descents over signed permutations with maxdrop_B <= k."""
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    if n <= k:
        return eulerian_poly_b(n)
    return _restricted_b_row(k, n)[n]


def _check_k(k: int):
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")


def _nonnegative_support(p: IntLaurentPoly, name: str) -> IntLaurentPoly:
    if not p.is_zero() and p.min_degree < 0:
        raise ArithmeticError(f"{name} has negative exponents: {p!r}")
    return p


@cache
def t_poly(k: int) -> IntLaurentPoly:
    _check_k(k)
    return drop_sum(k, eulerian_poly_b, k + 1, lambda s: -s)


def t_tilde_poly(k: int) -> IntLaurentPoly:
    """``x^k T_k(x)``; supported in ``[k, (k+1)^2 - 1]``."""
    p = _nonnegative_support(t_poly(k).shift(k), f"T~_{k}")
    if not t_tilde_window(k).contains(p):
        raise ArithmeticError(f"T~_{k} escapes [{k}, {(k + 1) ** 2 - 1}]")
    return p


def t_tilde_window(k: int) -> Window:
    return Window(k, (k + 1) ** 2 - 1)


def ekb_counts_via_tk(n: int, k: int) -> DescentTable:
    """E_B^k(n, d) as the coefficient of ``x^((k+1)d)`` in ``T_k (1+...+x^k)^(n-k)``."""
    if k < 0 or n < k:
        raise ValueError(f"needs n >= k >= 0, got n={n}, k={k}")
    series = t_poly(k) * geometric_sum(k) ** (n - k)
    if series.is_zero():
        return DescentTable()
    top = series.max_degree // (k + 1)
    return DescentTable({d: series.coefficient((k + 1) * d) for d in range(top + 1)})


@cache
def f_poly(k: int) -> IntLaurentPoly:
    _check_k(k)
    return _nonnegative_support(drop_sum(k, eulerian_poly_b, k + 2, lambda s: k + 1 - s), f"F_{k}")


@cache
def h_prime_poly(k: int) -> IntLaurentPoly:
    _check_k(k)
    return drop_sum(k, eulerian_poly_b, 2 * k + 2, lambda s: 2 * k + 1 - s)


@cache
def h_dprime_poly(k: int) -> IntLaurentPoly:
    _check_k(k)
    return drop_sum(k, eulerian_poly_b, -(2 * k + 2), lambda s: 2 * (k + 1) ** 2 + s)


@cache
def h_poly(k: int) -> IntLaurentPoly:
    """``H_k(x) = H'_k(x) + H''_k(x)``, supported in ``[0, 2k^2 + 6k + 3]``."""
    p = _nonnegative_support(h_prime_poly(k) + h_dprime_poly(k), f"H_{k}")
    if not h_window(k).contains(p):
        raise ArithmeticError(f"H_{k} escapes its window")
    return p


def h_window(k: int) -> Window:
    return Window(0, 2 * k * k + 6 * k + 3)


@cache
def g_poly(k: int) -> IntLaurentPoly:
    _check_k(k)
    first = drop_sum(k, eulerian_poly_b, 2 * k + 4, lambda s: 2 * k + 3 - s).shift(-1)
    second = drop_sum(k, eulerian_poly_b, -(2 * k + 4), lambda s: 2 * (k + 1) * (k + 2) + s)
    return _nonnegative_support(first + second, f"G_{k}")


@dataclass(frozen=True)
class CoeffArray:
    """Coefficients laid out so that ``entries[i][j]`` is the coefficient of
    ``x^(base + stride*i + j)``.
    """
    rows: int
    cols: int
    stride: int
    entries: tuple[tuple[int, ...], ...]
    base: int = 0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("array needs at least one row and one column")
        if self.stride < self.cols:
            raise ValueError("stride must be >= cols so rows do not overlap")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_entries(cls, entries, stride: int | None = None, base: int = 0) -> CoeffArray:
        rows = tuple(tuple(int(v) for v in r) for r in entries)
        cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, cols if stride is None else stride, rows, base)

    @classmethod
    def from_poly(cls, p: IntLaurentPoly, rows: int, cols: int, stride: int | None = None,
                  base: int = 0) -> CoeffArray:
        """Lay out ``p``; raises if any nonzero coefficient falls outside the grid."""
        stride = cols if stride is None else stride
        entries = tuple(
            tuple(p.coefficient(base + stride * i + j) for j in range(cols)) for i in range(rows)
        )
        arr = cls(rows, cols, stride, entries, base)
        if arr.to_poly() != p:
            raise ValueError(f"polynomial does not fit a {rows}x{cols} array with stride {stride}")
        return arr

    def to_poly(self) -> IntLaurentPoly:
        return IntLaurentPoly.from_terms(
            (self.base + self.stride * i + j, c)
            for i, row in enumerate(self.entries) for j, c in enumerate(row)
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry ``(i, j)``; zero for any index outside the grid."""
        i, j = ij
        if 0 <= i < self.rows and 0 <= j < self.cols:
            return self.entries[i][j]
        return 0

    def rotate180(self) -> CoeffArray:
        return CoeffArray.from_entries([row[::-1] for row in self.entries[::-1]], self.stride, self.base)

    def hconcat(self, other: CoeffArray) -> CoeffArray:
        """Columns of ``self`` followed by columns of ``other``."""
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return CoeffArray.from_entries([a + b for a, b in zip(self.entries, other.entries)])

    def insert_zero_column(self, before: int) -> CoeffArray:
        """New zero column at index ``before`` (``cols`` appends one at the end)."""
        if not 0 <= before <= self.cols:
            raise ValueError(f"column index {before} out of range")
        return CoeffArray.from_entries([row[:before] + (0,) + row[before:] for row in self.entries])

    def columns(self, start: int, stop: int) -> CoeffArray:
        return CoeffArray.from_entries([row[start:stop] for row in self.entries])

    def __add__(self, other: CoeffArray) -> CoeffArray:
        if (self.rows, self.cols, self.stride, self.base) != (other.rows, other.cols, other.stride, other.base):
            raise ValueError("arrays have different layouts")
        return CoeffArray.from_entries(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.stride, self.base
        )

    def same_entries(self, other: CoeffArray) -> bool:
        return self.entries == other.entries

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def array_t(k: int) -> CoeffArray:
    return CoeffArray.from_poly(t_tilde_poly(k), k + 2, k + 1)


def array_f(k: int) -> CoeffArray:
    return CoeffArray.from_poly(f_poly(k), k + 2, k + 2)


def array_h(k: int) -> CoeffArray:
    return CoeffArray.from_poly(h_poly(k), k + 2, 2 * k + 2)


def array_h_prime(k: int) -> CoeffArray:
    return CoeffArray.from_poly(h_prime_poly(k), k + 2, 2 * k + 2)


def array_h_dprime(k: int) -> CoeffArray:
    return CoeffArray.from_poly(h_dprime_poly(k), k + 2, 2 * k + 2)


def array_g(k: int) -> CoeffArray:
    return CoeffArray.from_poly(g_poly(k), k + 2, 2 * k + 4)


# structural checks

def check_construction_lemma(k: int) -> bool:
    """``h_k`` is ``t_k`` rotated by 180 degrees, followed by ``t_k``."""
    t = array_t(k)
    return array_h(k).same_entries(t.rotate180().hconcat(t))


def check_insert_lemma(k: int) -> bool:
    """``f_k`` is ``t_k`` with a zero column in front."""
    return array_f(k).same_entries(array_t(k).insert_zero_column(0))


def check_g_construction(k: int) -> bool:
    """``g_k`` is ``h_k`` with zero columns after its (k+1)-st and 2(k+1)-st columns."""
    h = array_h(k)
    expected = h.insert_zero_column(h.cols).insert_zero_column(k + 1)
    return array_g(k).same_entries(expected)


def check_h_symmetry(k: int) -> bool:
    """``h_k(i, j) == h_k(k+1-i, 2k+1-j)`` everywhere."""
    h = array_h(k)
    return all(h[i, j] == h[k + 1 - i, 2 * k + 1 - j] for i in range(k + 2) for j in range(2 * k + 2))


def check_h_recurrence(k: int) -> bool:
    """``H_{k+1} = G_k (x + x^2 + ... + x^(2k+4))``."""
    _check_k(k)
    return h_poly(k + 1) == g_poly(k) * geometric_sum(2 * k + 3).shift(1)


def check_entry_recurrences(k: int) -> bool:
    """Column-sum recurrences linking ``h_k`` to ``h_{k-1}`` (``k >= 1``), plus
    ``h_k(i,k) = h_k(i,k+1)`` and ``h_k(i,0) = h_k(i-1,2k+1)``.
    """
    _check_k(k)
    h = array_h(k)
    for i in range(k + 2):
        if h[i, k] != h[i, k + 1] or h[i, 0] != h[i - 1, 2 * k + 1]:
            return False
    if k == 0:
        return True
    prev = array_h(k - 1)
    last = 2 * k - 1
    for i in range(k + 2):
        for j in range(2 * k + 2):
            split = j if j <= k else j - 1
            expected = sum(prev[i, c] for c in range(split)) + sum(prev[i - 1, c] for c in range(split, last + 1))
            if h[i, j] != expected:
                return False
    return True


def check_b_symmetry(n: int) -> bool:
    """``B_n(t) == t^n B_n(1/t)``."""
    b = eulerian_poly_b(n)
    return b == substitute_power(b, -1).shift(n)


def bsum_sides(n: int) -> tuple[IntLaurentPoly, IntLaurentPoly]:
    """Both sides of ``sum_l C(n,l) B_{n-l}(t)(t-1)^l = t^(n+1) sum_l C(n,l) B_{n-l}(1/t)(1/t-1)^l``."""
    t_minus_1 = IntLaurentPoly([-1, 1])
    inv_minus_1 = substitute_power(t_minus_1, -1)
    left = IntLaurentPoly.zero()
    right = IntLaurentPoly.zero()
    for l in range(n + 1):
        left = left + comb(n, l) * eulerian_poly_b(n - l) * t_minus_1 ** l
        right = right + comb(n, l) * substitute_power(eulerian_poly_b(n - l), -1) * inv_minus_1 ** l
    return left, right.shift(n + 1)


def check_bsum_identity(n: int) -> bool:
    """The binomial-sum identity; it holds for ``n >= 1`` and fails at ``n = 0`` (``1`` vs ``t``)."""
    left, right = bsum_sides(n)
    return left == right


def egf_sides(n: int, b_n: IntLaurentPoly | None = None) -> tuple[IntLaurentPoly, IntLaurentPoly]:
    """``(1-t) B_n`` and ``(1-t)^(n+1) + t sum_{j>=1} C(n,j) 2^j (1-t)^j B_{n-j}``.

    ``b_n`` overrides ``B_n`` on the left, e.g. with an enumerated value.
    """
    left = ONE_MINUS_T * (eulerian_poly_b(n) if b_n is None else b_n)
    right = ONE_MINUS_T ** (n + 1)
    t = IntLaurentPoly.monomial(1, 1)
    for j in range(1, n + 1):
        right = right + t * (comb(n, j) * 2 ** j) * ONE_MINUS_T ** j * eulerian_poly_b(n - j)
    return left, right


def check_egf_identity(n: int, b_n: IntLaurentPoly | None = None) -> bool:
    left, right = egf_sides(n, b_n)
    return left == right


def type_b_order(n: int) -> int:
    return 2 ** n * factorial(n)
