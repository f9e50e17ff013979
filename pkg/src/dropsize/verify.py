"""Verification suites: every invariant of the library as a list of
independent cells that can run serially or in a process pool.

Each cell function returns ``(passed, witness)`` where ``witness`` is a short
string describing the smallest offending object, or ``None``. A cell may add
a third element, a human-readable detail shown even on success.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Any, Callable

from . import bijection, enumeration, typea, typeb
from .enumeration import DescentTable
from .exactpoly import IntLaurentPoly, Window, is_unimodal

__all__ = ["CheckResult", "Cell", "SUITES", "LIMITS", "DEFAULTS", "build_cells", "run_cells", "default_jobs"]

JOBS_ENV = "DROPSIZE_JOBS"


@dataclass(frozen=True)
class Cell:
    name: str
    func: Callable[..., tuple[bool, str | None]]
    params: dict[str, int] = field(default_factory=dict)


@dataclass
class CheckResult:
    name: str
    params: dict[str, int]
    passed: bool
    seconds: float
    witness: str | None = None
    detail: str | None = None

    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})"


def _poly_diff(a: IntLaurentPoly, b: IntLaurentPoly) -> str | None:
    if a == b:
        return None
    lo = min(a.min_degree if not a.is_zero() else 0, b.min_degree if not b.is_zero() else 0)
    hi = max(a.max_degree if not a.is_zero() else 0, b.max_degree if not b.is_zero() else 0)
    for e in range(lo, hi + 1):
        if a.coefficient(e) != b.coefficient(e):
            return f"x^{e}: {a.coefficient(e)} != {b.coefficient(e)}"
    return "polynomials differ"


def _ok(passed: bool, witness: str | None = None) -> tuple[bool, str | None]:
    return passed, (None if passed else witness)


# type A

def cell_triple_a(n: int, k: int):
    rec = DescentTable.from_poly(typea.restricted_descent_poly_a(n, k))
    closed = typea.ek_counts_via_pk(n, k)
    oracle = enumeration.oracle_descent_table_a(n, k)
    return (*_ok(rec == closed == oracle,
                 f"recurrence={rec.counts} closed={closed.counts} enumeration={oracle.counts}"),
            f"A_({n},{k})(y) = {rec.to_poly().to_text('y')}")


def cell_q_identity(n: int):
    return _ok(typea.check_q_identity(n), _poly_diff(typea.q_poly(n), typea.q_identity_rhs(n)))


def cell_r_identity(n: int, k: int):
    return _ok(typea.check_r_identity(n, k), _poly_diff(typea.r_poly(n, k), typea.r_identity_rhs(n, k)))


def cell_r_symmetry(n: int, k: int):
    return _ok(typea.check_r_symmetry(n, k), f"R_({n},{k}) = {typea.r_poly(n, k)}")


def cell_q_unimodal(k: int):
    q = typea.q_poly(k)
    return _ok(is_unimodal(q, Window(0, k * (k + 2))), f"Q_{k} = {q}")


def cell_eulerian_a(n: int):
    a = typea.eulerian_poly_a(n)
    return _ok(a(1) == factorial(n) and all(c > 0 for c in a.coeffs), f"A_{n} = {a}")


# bijection

def cell_involution(n: int, k: int):
    bad = bijection.find_involution_failure(n, k)
    return _ok(bad is None, f"pi={bad}")


def cell_gamma(n: int, k: int):
    bad = bijection.find_gamma_failure(n, k)
    return _ok(bad is None, repr(bad))


def cell_index_map(n: int, k: int):
    for i in range(n):
        for j in range(k + 1):
            ip, jp = bijection.target_indices(n, k, i, j)
            if bijection.target_indices(n, k, ip, jp) != (i, j):
                return False, f"(i,j)=({i},{j})"
    return True, None


# type B

def cell_triple_b(n: int, k: int, allow_large: bool = False):
    rec = DescentTable.from_poly(typeb.restricted_descent_poly_b(n, k))
    closed = typeb.ekb_counts_via_tk(n, k)
    oracle = enumeration.oracle_descent_table_b(n, k, allow_large)
    return (*_ok(rec == closed == oracle,
                 f"recurrence={rec.counts} closed={closed.counts} enumeration={oracle.counts}"),
            f"B_({n},{k})(y) = {rec.to_poly().to_text('y')}")


def cell_eulerian_b_enum(n: int, allow_large: bool = False):
    enumerated = enumeration.oracle_descent_table_b(n, n, allow_large).to_poly()
    computed = typeb.eulerian_poly_b(n)
    if enumerated != computed:
        return False, _poly_diff(computed, enumerated)
    return _ok(typeb.check_egf_identity(n, enumerated), "EGF identity fails on enumerated B_n")


def cell_b_symmetry(n: int):
    return _ok(typeb.check_b_symmetry(n), f"B_{n} = {typeb.eulerian_poly_b(n)}")


def cell_bsum(n: int):
    return _ok(typeb.check_bsum_identity(n), _poly_diff(*typeb.bsum_sides(n)))


def cell_egf(n: int):
    return _ok(typeb.check_egf_identity(n), _poly_diff(*typeb.egf_sides(n)))


# arrays

def cell_construction(k: int):
    return _ok(typeb.check_construction_lemma(k), f"h_{k}={typeb.array_h(k).tolist()} t_{k}={typeb.array_t(k).tolist()}")


def cell_insert(k: int):
    return _ok(typeb.check_insert_lemma(k), f"f_{k}={typeb.array_f(k).tolist()}")


def cell_g_construction(k: int):
    return _ok(typeb.check_g_construction(k), f"g_{k}={typeb.array_g(k).tolist()}")


def cell_h_symmetry(k: int):
    return _ok(typeb.check_h_symmetry(k), f"h_{k}={typeb.array_h(k).tolist()}")


def cell_h_recurrence(k: int):
    return _ok(typeb.check_h_recurrence(k), _poly_diff(typeb.h_poly(k + 1), typeb.g_poly(k) * IntLaurentPoly([0] + [1] * (2 * k + 4))))


def cell_entry_recurrences(k: int):
    return _ok(typeb.check_entry_recurrences(k), f"h_{k}={typeb.array_h(k).tolist()}")


def cell_t_unimodal(k: int):
    return _ok(is_unimodal(typeb.t_tilde_poly(k), typeb.t_tilde_window(k)), f"T~_{k} = {typeb.t_tilde_poly(k)}")


def cell_h_unimodal(k: int):
    return _ok(is_unimodal(typeb.h_poly(k), typeb.h_window(k)), f"H_{k} = {typeb.h_poly(k)}")


SUITES = ("typea", "typeb", "bijection", "arrays")

# (without --force, with --force)
LIMITS = {
    "typea": (enumeration.MAX_N_A, enumeration.MAX_N_A),
    "typeb": (enumeration.MAX_N_B, enumeration.MAX_N_B_LARGE),
    "bijection": (8, 10),
    "max_k": (12, 30),
}
DEFAULTS = {"typea": 8, "typeb": 6, "bijection": 7, "max_k": 8}


def build_cells(suite: str, max_n: int | None = None, max_k: int | None = None,
                force: bool = False) -> list[Cell]:
    """Cells for one suite, or for every suite when ``suite == "all"``.

    Raises ``ValueError`` if a bound exceeds the desk-scale limit and
    ``force`` is not set.
    """
    if suite == "all":
        cells = []
        for s in SUITES:
            n = None if max_n is None or s == "arrays" else min(max_n, LIMITS[s][force])
            cells += build_cells(s, n, max_k, force)
        return cells
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    kmax = DEFAULTS["max_k"] if max_k is None else max_k
    if kmax < 0 or kmax > LIMITS["max_k"][force]:
        raise ValueError(f"--max-k must lie in [0, {LIMITS['max_k'][force]}]")
    cells: list[Cell] = []
    if suite == "arrays":
        for k in range(kmax + 1):
            for fn in (cell_construction, cell_insert, cell_g_construction, cell_h_symmetry,
                       cell_h_recurrence, cell_t_unimodal, cell_h_unimodal):
                cells.append(Cell(fn.__name__[5:], fn, {"k": k}))
            # the column-sum recurrences relate h_k to h_(k-1)
            if k >= 1:
                cells.append(Cell("entry_recurrences", cell_entry_recurrences, {"k": k}))
        return cells

    nmax = DEFAULTS[suite] if max_n is None else max_n
    if nmax < 0 or nmax > LIMITS[suite][force]:
        raise ValueError(f"--max-n for {suite} must lie in [0, {LIMITS[suite][force]}]"
                         + ("" if force else " (use --force for more)"))
    if suite == "typea":
        for n in range(1, nmax + 1):
            cells.append(Cell("eulerian_a", cell_eulerian_a, {"n": n}))
            for k in range(n):
                cells.append(Cell("triple_agreement_a", cell_triple_a, {"n": n, "k": k}))
        # the refined identities read enumerations of size n+1
        for n in range(nmax):
            cells.append(Cell("q_identity", cell_q_identity, {"n": n}))
            for k in range(n + 1):
                cells.append(Cell("r_identity", cell_r_identity, {"n": n, "k": k}))
                cells.append(Cell("r_symmetry", cell_r_symmetry, {"n": n, "k": k}))
        for k in range(kmax + 1):
            cells.append(Cell("q_unimodal", cell_q_unimodal, {"k": k}))
    elif suite == "typeb":
        large = nmax > enumeration.MAX_N_B
        for n in range(nmax + 1):
            extra = {"allow_large": True} if large else {}
            cells.append(Cell("eulerian_b_enumeration", _partial(cell_eulerian_b_enum, extra), {"n": n}))
            for k in range(n + 1):
                cells.append(Cell("triple_agreement_b", _partial(cell_triple_b, extra), {"n": n, "k": k}))
        for n in range(kmax + 1):
            cells.append(Cell("b_symmetry", cell_b_symmetry, {"n": n}))
            cells.append(Cell("egf_identity", cell_egf, {"n": n}))
            # the binomial-sum identity is false at n = 0 (1 vs t)
            if n >= 1:
                cells.append(Cell("bsum_identity", cell_bsum, {"n": n}))
    elif suite == "bijection":
        for n in range(1, nmax + 1):
            for k in range(n):
                cells.append(Cell("involution", cell_involution, {"n": n, "k": k}))
                cells.append(Cell("gamma_mapping", cell_gamma, {"n": n, "k": k}))
                cells.append(Cell("index_map_involution", cell_index_map, {"n": n, "k": k}))
    return cells


class _partial:
    """Picklable keyword binding (closures cannot cross process boundaries)."""

    def __init__(self, func, kwargs: dict[str, Any]):
        self.func = func
        self.kwargs = kwargs

    def __call__(self, **params):
        return self.func(**params, **self.kwargs)


def _run_one(cell: Cell) -> CheckResult:
    start = time.perf_counter()
    detail = None
    try:
        passed, witness, *rest = cell.func(**cell.params)
        detail = rest[0] if rest else None
    except Exception as exc:  # a crash is a failed check, with the error as witness
        passed, witness = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(cell.name, dict(cell.params), passed, time.perf_counter() - start, witness, detail)


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_cells(cells: list[Cell], jobs: int = 1) -> list[CheckResult]:
    """Run cells and return results in cell order regardless of scheduling."""
    if jobs <= 1 or len(cells) <= 1:
        return [_run_one(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, cells))
