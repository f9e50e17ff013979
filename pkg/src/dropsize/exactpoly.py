"""Exact integer Laurent polynomials in one variable.

Coefficients are Python ints, so nothing ever overflows. Values are
immutable; every operation returns a new polynomial.

>>> p = IntLaurentPoly([1, 1], min_degree=-1)   # x^-1 + 1
>>> q = IntLaurentPoly([-1, 0, 1], min_degree=-1)  # -x^-1 + x
>>> p + q
IntLaurentPoly([1, 1], min_degree=0)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "IntLaurentPoly", "Window",
    "add", "mul", "power", "substitute_power", "geometric_sum",
    "coefficient", "is_unimodal", "is_window_symmetric", "reverse_in_window",
]


class IntLaurentPoly:
    """A Laurent polynomial with integer coefficients.

    ``coeffs[t]`` is the coefficient of ``x**(min_degree + t)``. The stored
    form is canonical: the zero polynomial has no coefficients and
    ``min_degree == 0``, otherwise the first and last coefficients are
    nonzero. Equality is therefore structural.
    """

    __slots__ = ("_min", "_coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_degree: int = 0):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self._min = 0
            self._coeffs: tuple[int, ...] = ()
        else:
            self._min = int(min_degree) + lo
            self._coeffs = tuple(cs[lo:hi])

    # constructors

    @classmethod
    def zero(cls) -> IntLaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> IntLaurentPoly:
        return cls([1])

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> IntLaurentPoly:
        return cls([coeff], exponent)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> IntLaurentPoly:
        """Build from ``{exponent: coefficient}`` or ``(exponent, coefficient)`` pairs.

        Repeated exponents are summed.
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls()
        lo, hi = min(acc), max(acc)
        return cls([acc.get(e, 0) for e in range(lo, hi + 1)], lo)

    # accessors

    @property
    def min_degree(self) -> int:
        return self._min

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return self._min + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, e: int) -> int:
        t = e - self._min
        if 0 <= t < len(self._coeffs):
            return self._coeffs[t]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent order."""
        for t, c in enumerate(self._coeffs):
            if c:
                yield self._min + t, c

    def __call__(self, value):
        """Evaluate exactly; negative exponents need a nonzero value."""
        if not self._coeffs:
            return 0
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        if self._min >= 0:
            return acc * value ** self._min
        return Fraction(acc) / Fraction(value) ** (-self._min)

    # arithmetic

    def __add__(self, other: IntLaurentPoly | int) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._coeffs:
            return other
        if not other._coeffs:
            return self
        lo = min(self._min, other._min)
        hi = max(self._min + len(self._coeffs), other._min + len(other._coeffs))
        out = [0] * (hi - lo)
        for t, c in enumerate(self._coeffs, self._min - lo):
            out[t] += c
        for t, c in enumerate(other._coeffs, other._min - lo):
            out[t] += c
        return IntLaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> IntLaurentPoly:
        return IntLaurentPoly([-c for c in self._coeffs], self._min)

    def __sub__(self, other: IntLaurentPoly | int) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntLaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntLaurentPoly | int) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntLaurentPoly()
        out = [0] * (len(a) + len(b) - 1)
        for s, ca in enumerate(a):
            if ca:
                for t, cb in enumerate(b, s):
                    out[t] += ca * cb
        return IntLaurentPoly(out, self._min + other._min)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntLaurentPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {e!r}")
        result = IntLaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> IntLaurentPoly:
        """Multiply by ``x**k``."""
        if not self._coeffs:
            return self
        return IntLaurentPoly(self._coeffs, self._min + k)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntLaurentPoly([other])
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self._min == other._min and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._min, self._coeffs))

    def __repr__(self) -> str:
        return f"IntLaurentPoly({list(self._coeffs)}, min_degree={self._min})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        """Render with ascending exponents, e.g. ``x + 2x^2 + x^3``."""
        parts: list[str] = []
        for e, c in self.terms():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}"
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def _coerce(value) -> IntLaurentPoly:
    if isinstance(value, IntLaurentPoly):
        return value
    if isinstance(value, int):
        return IntLaurentPoly([value])
    return NotImplemented


@dataclass(frozen=True)
class Window:
    """Closed exponent range ``[lo, hi]`` over which a coefficient sequence is read."""
    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, p: IntLaurentPoly) -> bool:
        return p.is_zero() or (self.lo <= p.min_degree and p.max_degree <= self.hi)


def add(p: IntLaurentPoly, q: IntLaurentPoly) -> IntLaurentPoly:
    return p + q


def mul(p: IntLaurentPoly, q: IntLaurentPoly) -> IntLaurentPoly:
    return p * q


def power(p: IntLaurentPoly, e: int) -> IntLaurentPoly:
    return p ** e


def substitute_power(p: IntLaurentPoly, m: int) -> IntLaurentPoly:
    """Return ``p(x**m)``. Negative ``m`` gives a Laurent polynomial."""
    if m == 0:
        raise ValueError("substitution exponent must be nonzero")
    return IntLaurentPoly.from_terms((m * e, c) for e, c in p.terms())


def geometric_sum(k: int) -> IntLaurentPoly:
    """``1 + x + ... + x**k``."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return IntLaurentPoly([1] * (k + 1))


def coefficient(p: IntLaurentPoly, e: int) -> int:
    return p.coefficient(e)


def _window_sequence(p: IntLaurentPoly, w: Window) -> list[int]:
    if not w.contains(p):
        raise ValueError(f"support of {p!r} is not inside [{w.lo}, {w.hi}]")
    return [p.coefficient(e) for e in range(w.lo, w.hi + 1)]


def is_unimodal(p: IntLaurentPoly, w: Window) -> bool:
    """True iff the coefficients over ``w`` weakly rise and then weakly fall.

    Zeros inside the window count as coefficients, so ``1 + x**2`` read over
    ``[0, 2]`` is not unimodal.
    """
    seq = _window_sequence(p, w)
    t = 1
    while t < len(seq) and seq[t - 1] <= seq[t]:
        t += 1
    while t < len(seq) and seq[t - 1] >= seq[t]:
        t += 1
    return t == len(seq)


def is_window_symmetric(p: IntLaurentPoly, w: Window) -> bool:
    seq = _window_sequence(p, w)
    return seq == seq[::-1]


def reverse_in_window(p: IntLaurentPoly, w: Window) -> IntLaurentPoly:
    """Mirror coefficients across the centre of ``w``: ``x**e -> x**(lo + hi - e)``."""
    if not w.contains(p):
        raise ValueError(f"support of {p!r} is not inside [{w.lo}, {w.hi}]")
    return IntLaurentPoly.from_terms((w.lo + w.hi - e, c) for e, c in p.terms())
