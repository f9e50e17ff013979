"""The involution on A_{n,k} that pairs descent/last-entry classes.

A permutation ``pi`` of [n] with maxdrop <= k has class ``(i, j)`` where
``i = des(pi)`` and ``pi_n = n - k + j``. The target class ``(i', j')`` is
fixed by ``(k+1)i + j + (k+1)i' + j' = (n+1)k`` with ``0 <= j' <= k``. The map
peels ``pi`` down to ``1`` with :func:`remove_end` and rebuilds the image one
entry at a time, inserting ``m - k + j'`` at each length ``m``.

>>> phi((1, 2, 3, 5, 4), 2)
(3, 2, 1, 4, 5)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .enumeration import gen_bounded_perms
from .permstat import Permutation, des, insert_end, maxdrop, remove_end

__all__ = [
    "GammaKey", "PhiStep",
    "target_indices", "gamma_key", "phi", "phi_trace",
    "find_involution_failure", "find_gamma_failure",
    "verify_involution", "verify_gamma_mapping", "gamma_class_counts",
]


class GammaKey(NamedTuple):
    n: int
    i: int
    j: int


@dataclass(frozen=True)
class PhiStep:
    """One rebuild step at length ``m = len(prefix)``."""
    prefix: Permutation
    i: int
    j: int
    i_target: int
    j_target: int
    inserted: int
    image: Permutation


def target_indices(n: int, k: int, i: int, j: int) -> tuple[int, int]:
    """Class paired with ``(i, j)``; floor division rounds toward minus infinity.

    Total in ``i``: a result with ``i'`` outside ``[0, n-1]`` means ``(i, j)``
    is not a class that occurs in A_{n,k}.
    """
    if not 0 <= j <= k:
        raise ValueError(f"j must lie in [0, {k}], got {j}")
    rest = (n + 1) * k - (k + 1) * i - j
    return divmod(rest, k + 1)


def gamma_key(pi: Sequence[int], k: int) -> GammaKey:
    n = len(pi)
    return GammaKey(n, des(pi), pi[-1] - n + k)


def phi_trace(pi: Sequence[int], k: int) -> list[PhiStep]:
    """All rebuild steps, shortest prefix first; the last image is ``phi(pi, k)``."""
    n = len(pi)
    if n < 1:
        raise ValueError("phi needs n >= 1")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if maxdrop(pi) > k:
        raise ValueError(f"maxdrop({tuple(pi)}) = {maxdrop(pi)} exceeds k = {k}")

    prefixes = [tuple(pi)]
    while len(prefixes[-1]) > 1:
        prefixes.append(remove_end(prefixes[-1])[0])
    prefixes.reverse()

    steps = [PhiStep((1,), 0, k, *target_indices(1, k, 0, k), inserted=1, image=(1,))]
    image: Permutation = (1,)
    for sigma in prefixes[1:]:
        m = len(sigma)
        if maxdrop(sigma) > k:
            raise AssertionError(f"prefix {sigma} left A_({m},{k})")
        i, j = des(sigma), sigma[-1] - m + k
        ip, jp = target_indices(m, k, i, j)
        image = insert_end(image, m - k + jp)
        steps.append(PhiStep(sigma, i, j, ip, jp, m - k + jp, image))
    return steps


def phi(pi: Sequence[int], k: int) -> Permutation:
    return phi_trace(pi, k)[-1].image


def find_involution_failure(n: int, k: int) -> Permutation | None:
    """First ``pi`` in A_{n,k} (lexicographic) with ``phi(phi(pi)) != pi``."""
    for pi in gen_bounded_perms(n, k):
        if phi(phi(pi, k), k) != pi:
            return pi
    return None


def verify_involution(n: int, k: int) -> bool:
    return find_involution_failure(n, k) is None


def gamma_class_counts(n: int, k: int) -> dict[tuple[int, int], int]:
    """``|Gamma^k(n, i; j)|`` for every nonempty class."""
    return dict(Counter(gamma_key(pi, k)[1:] for pi in gen_bounded_perms(n, k)))


def find_gamma_failure(n: int, k: int) -> tuple | None:
    """A witness against the class pairing, or ``None``.

    Checks that every image lands in its target class, that the target
    descent count lies in ``[0, n-1]``, and that paired classes have equal size.
    """
    for pi in gen_bounded_perms(n, k):
        _, i, j = gamma_key(pi, k)
        ip, jp = target_indices(n, k, i, j)
        if not 0 <= ip <= n - 1:
            return ("target descent count out of range", pi, (i, j), (ip, jp))
        image = phi(pi, k)
        if des(image) != ip or image[-1] != n - k + jp:
            return ("image outside target class", pi, (i, j), (ip, jp), image)
    counts = gamma_class_counts(n, k)
    for (i, j), c in sorted(counts.items()):
        ip, jp = target_indices(n, k, i, j)
        if counts.get((ip, jp), 0) != c:
            return ("class sizes differ", (i, j), c, (ip, jp), counts.get((ip, jp), 0))
    return None


def verify_gamma_mapping(n: int, k: int) -> bool:
    return find_gamma_failure(n, k) is None
