"""Permutations and signed permutations in one-line notation, with their
descent and drop statistics.

Both kinds are plain tuples of ints, 1-indexed by position: ``pi[0]`` holds
the value at position 1. A signed permutation stores negative entries as
negative ints; its virtual entry at position 0 is always 0 and is never
stored.
"""

from __future__ import annotations

import re
from typing import Sequence

__all__ = [
    "Permutation", "SignedPermutation",
    "parse_permutation", "parse_signed_permutation", "format_permutation",
    "is_permutation", "is_signed_permutation",
    "descent_set", "des", "maxdrop",
    "descent_set_b", "des_b", "maxdrop_b",
    "insert_end", "remove_end", "standardize",
]

Permutation = tuple[int, ...]
SignedPermutation = tuple[int, ...]

_SEP = re.compile(r"[\s,]+")


def is_permutation(entries: Sequence[int]) -> bool:
    return sorted(entries) == list(range(1, len(entries) + 1))


def is_signed_permutation(entries: Sequence[int]) -> bool:
    return sorted(abs(v) for v in entries) == list(range(1, len(entries) + 1))


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    tokens = [t for t in _SEP.split(text) if t]
    # a single run of digits such as "12354" is read digit by digit
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        return tuple(int(ch) for ch in tokens[0])
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"not a list of integers: {text!r}") from None


def parse_permutation(text: str) -> Permutation:
    """Parse ``"4 5 2 1 3"``, ``"4,5,2,1,3"`` or the compact ``"45213"``."""
    pi = _parse_ints(text)
    if not is_permutation(pi):
        raise ValueError(f"not a permutation of 1..{len(pi)}: {text!r}")
    return pi


def parse_signed_permutation(text: str) -> SignedPermutation:
    """Parse ``"-1 2"`` or ``"-1,2"``; signs are leading minus signs."""
    pi = _parse_ints(text)
    if not is_signed_permutation(pi):
        raise ValueError(f"not a signed permutation of 1..{len(pi)}: {text!r}")
    return pi


def format_permutation(pi: Sequence[int], sep: str = " ") -> str:
    return sep.join(str(v) for v in pi)


def descent_set(pi: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def des(pi: Sequence[int]) -> int:
    d = 0
    for a, b in zip(pi, pi[1:]):
        if a > b:
            d += 1
    return d


def maxdrop(pi: Sequence[int]) -> int:
    """``max(i - pi_i)`` over positions ``i``; always >= 0 for n >= 1."""
    if not pi:
        raise ValueError("maxdrop is undefined for the empty permutation")
    return max(i - v for i, v in enumerate(pi, 1))


def descent_set_b(pi: Sequence[int]) -> frozenset[int]:
    """Type B descent positions in ``[0, n-1]``, reading ``pi_0 = 0``."""
    padded = (0, *pi)
    return frozenset(i for i in range(len(pi)) if padded[i] > padded[i + 1])


def des_b(pi: Sequence[int]) -> int:
    d = 0
    prev = 0
    for v in pi:
        if prev > v:
            d += 1
        prev = v
    return d


def maxdrop_b(pi: Sequence[int]) -> int:
    """Largest of ``i - pi_i`` over positive entries and ``i`` over negative ones."""
    if not pi:
        raise ValueError("maxdrop_b is undefined for the empty signed permutation")
    return max(i if v < 0 else i - v for i, v in enumerate(pi, 1))


def standardize(entries: Sequence[int]) -> Permutation:
    """The permutation of ``1..len(entries)`` order-isomorphic to ``entries``."""
    order = sorted(range(len(entries)), key=entries.__getitem__)
    out = [0] * len(entries)
    for rank, pos in enumerate(order, 1):
        out[pos] = rank
    return tuple(out)


def insert_end(pi: Sequence[int], i: int) -> Permutation:
    """Append ``i`` and bump every old entry ``>= i`` by one."""
    n = len(pi)
    if not 1 <= i <= n + 1:
        raise ValueError(f"inserted value must lie in [1, {n + 1}], got {i}")
    return tuple(v + 1 if v >= i else v for v in pi) + (i,)


def remove_end(mu: Sequence[int]) -> tuple[Permutation, int]:
    """Inverse of :func:`insert_end`: ``(standardized prefix, last entry)``."""
    if not mu:
        raise ValueError("cannot remove from the empty permutation")
    last = mu[-1]
    return tuple(v - 1 if v > last else v for v in mu[:-1]), last
