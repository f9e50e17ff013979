"""Brute-force enumeration of S_n, A_{n,k}, B_n and B_{n,k}.

Everything here is computed straight from the definitions and is the ground
truth the recurrences and closed forms are checked against. Two generators
exist for each bounded set: a filter over the full group (the oracle) and a
pruned backtracking generator (fast). Tests pin them to each other.

All streams are lexicographic in the entries, so a failing index is
reproducible. Desk-scale bounds: type A ``n <= 10``; type B ``n <= 7``, with
``n = 8`` behind ``allow_large=True``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence

from .exactpoly import IntLaurentPoly
from .permstat import Permutation, SignedPermutation, des, des_b, maxdrop, maxdrop_b

__all__ = [
    "MAX_N_A", "MAX_N_B", "MAX_N_B_LARGE",
    "DescentTable", "RefinedTable",
    "gen_perms", "gen_bounded_perms", "gen_signed_perms", "gen_bounded_signed_perms",
    "descent_table", "refined_table",
    "joint_table_a", "joint_table_b",
    "oracle_descent_table_a", "oracle_descent_table_b",
    "oracle_refined_table_a",
]

MAX_N_A = 10
MAX_N_B = 7
MAX_N_B_LARGE = 8


def _check_bound(n: int, limit: int | None, what: str) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if limit is not None and n > limit:
        raise ValueError(f"{what} enumeration is limited to n <= {limit} (got {n}); "
                         "pass allow_large=True to go further")


def _limit_a(allow_large: bool) -> int | None:
    return None if allow_large else MAX_N_A


def _limit_b(allow_large: bool) -> int:
    return MAX_N_B_LARGE if allow_large else MAX_N_B


@dataclass(frozen=True)
class DescentTable:
    """Counts by number of descents; zero entries are dropped."""
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", {d: c for d, c in sorted(self.counts.items()) if c})

    @classmethod
    def from_poly(cls, poly: IntLaurentPoly) -> DescentTable:
        if not poly.is_zero() and poly.min_degree < 0:
            raise ValueError("descent polynomial has negative exponents")
        return cls(dict(poly.terms()))

    def to_poly(self) -> IntLaurentPoly:
        return IntLaurentPoly.from_terms(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, d: int) -> int:
        return self.counts.get(d, 0)


@dataclass(frozen=True)
class RefinedTable:
    """Counts keyed by ``(descents, last entry)``."""
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", {key: c for key, c in sorted(self.counts.items()) if c})

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)


# generators

def gen_perms(n: int, *, allow_large: bool = False) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    _check_bound(n, _limit_a(allow_large), "type A")
    return permutations(range(1, n + 1))


def _bounded_backtrack(n: int, k: int) -> Iterator[Permutation]:
    # position i (1-based) may only hold values >= i - k
    used = [False] * (n + 2)
    prefix: list[int] = []

    def extend(i: int) -> Iterator[Permutation]:
        if i > n:
            yield tuple(prefix)
            return
        for v in range(max(1, i - k), n + 1):
            if not used[v]:
                used[v] = True
                prefix.append(v)
                yield from extend(i + 1)
                prefix.pop()
                used[v] = False

    return extend(1)


def gen_bounded_perms(n: int, k: int, *, method: str = "pruned",
                      allow_large: bool = False) -> Iterator[Permutation]:
    """Members of A_{n,k} (maxdrop <= k) in lexicographic order.

    ``method="filter"`` filters S_n by :func:`maxdrop`; ``"pruned"`` never
    places a value below ``i - k`` at position ``i``.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_bound(n, _limit_a(allow_large), "type A")
    if method == "filter":
        if n == 0:
            return iter([()])
        return (pi for pi in permutations(range(1, n + 1)) if maxdrop(pi) <= k)
    if method == "pruned":
        return _bounded_backtrack(n, k)
    raise ValueError(f"unknown method {method!r}")


def gen_signed_perms(n: int, *, allow_large: bool = False) -> Iterator[SignedPermutation]:
    """All of B_n, lexicographic in the signed entries."""
    _check_bound(n, _limit_b(allow_large), "type B")
    values = [v for a in range(1, n + 1) for v in (-a, a)]
    values.sort()
    return _signed_lex(n, values, lambda i, v: True)


def _signed_lex(n: int, values: list[int], allowed: Callable[[int, int], bool]) -> Iterator[SignedPermutation]:
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend(i: int) -> Iterator[SignedPermutation]:
        if i > n:
            yield tuple(prefix)
            return
        for v in values:
            a = -v if v < 0 else v
            if not used[a] and allowed(i, v):
                used[a] = True
                prefix.append(v)
                yield from extend(i + 1)
                prefix.pop()
                used[a] = False

    return extend(1)


def gen_bounded_signed_perms(n: int, k: int, *, method: str = "pruned",
                             allow_large: bool = False) -> Iterator[SignedPermutation]:
    """Members of B_{n,k} (maxdrop_B <= k), lexicographic in the signed entries."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_bound(n, _limit_b(allow_large), "type B")
    if method == "filter":
        return (pi for pi in gen_signed_perms(n, allow_large=allow_large) if n == 0 or maxdrop_b(pi) <= k)
    if method == "pruned":
        values = sorted(v for a in range(1, n + 1) for v in (-a, a))
        # negative entries only at positions <= k; positive ones need i - v <= k
        return _signed_lex(n, values, lambda i, v: i <= k if v < 0 else i - v <= k)
    raise ValueError(f"unknown method {method!r}")


# tabulation

def descent_table(stream: Iterable[Sequence[int]], des_fn: Callable[[Sequence[int]], int] = des) -> DescentTable:
    return DescentTable(dict(Counter(des_fn(pi) for pi in stream)))


def refined_table(stream: Iterable[Sequence[int]]) -> RefinedTable:
    """Tally ``(des(pi), pi_n)`` over a stream of nonempty permutations."""
    return RefinedTable(dict(Counter((des(pi), pi[-1]) for pi in stream)))


@cache
def joint_table_a(n: int) -> dict[tuple[int, int], int]:
    """Counts of S_n by ``(des, maxdrop)``; one pass serves every k."""
    if n == 0:
        return {(0, 0): 1}
    return dict(Counter((des(pi), maxdrop(pi)) for pi in gen_perms(n)))


@cache
def joint_table_b(n: int, allow_large: bool = False) -> dict[tuple[int, int], int]:
    """Counts of B_n by ``(des_B, maxdrop_B)``."""
    if n == 0:
        return {(0, 0): 1}
    return dict(Counter((des_b(pi), maxdrop_b(pi)) for pi in gen_signed_perms(n, allow_large=allow_large)))


def _restrict(joint: dict[tuple[int, int], int], k: int) -> DescentTable:
    acc: Counter[int] = Counter()
    for (d, m), c in joint.items():
        if m <= k:
            acc[d] += c
    return DescentTable(dict(acc))


def oracle_descent_table_a(n: int, k: int) -> DescentTable:
    """E^k(n, d) for all d, by enumeration."""
    return _restrict(joint_table_a(n), k)


def oracle_descent_table_b(n: int, k: int, allow_large: bool = False) -> DescentTable:
    """E_B^k(n, d) for all d, by enumeration."""
    return _restrict(joint_table_b(n, allow_large), k)


@cache
def _refined_by_maxdrop(n: int) -> dict[tuple[int, int, int], int]:
    return dict(Counter((des(pi), pi[-1], maxdrop(pi)) for pi in gen_perms(n)))


def oracle_refined_table_a(n: int, k: int | None = None) -> RefinedTable:
    """E(n, i; j) (``k is None``) or E^k(n, i; j), by enumeration."""
    if n < 1:
        raise ValueError("refined counts need n >= 1")
    acc: Counter[tuple[int, int]] = Counter()
    for (d, last, m), c in _refined_by_maxdrop(n).items():
        if k is None or m <= k:
            acc[d, last] += c
    return RefinedTable(dict(acc))
