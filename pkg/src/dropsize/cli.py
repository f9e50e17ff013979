"""Command-line front end.

    dropsize poly Ttildek --k 3
    dropsize array h --k 2 --format csv
    dropsize phi "1 2 3 5 4" --k 2 --trace
    dropsize table descent --type B --n 3 --k 1
    dropsize verify all --max-k 8 --jobs 4

Exit status: 0 on success, 1 when a verification check fails, 2 on a usage
error. JSON coefficients are decimal strings so no consumer loses precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Sequence

from . import enumeration, typea, typeb
from .bijection import phi_trace
from .exactpoly import IntLaurentPoly
from .permstat import format_permutation, parse_permutation
from .typeb import CoeffArray
from .verify import CheckResult, build_cells, default_jobs, run_cells

__all__ = ["main", "POLY_KINDS", "ARRAY_KINDS", "poly_to_json", "poly_from_json", "render_array"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# kind -> (builder, required params, variable)
POLY_KINDS: dict[str, tuple[Callable[..., IntLaurentPoly], tuple[str, ...], str]] = {
    "An": (typea.eulerian_poly_a, ("n",), "y"),
    "Bn": (typeb.eulerian_poly_b, ("n",), "y"),
    "Ank": (typea.restricted_descent_poly_a, ("n", "k"), "y"),
    "Bnk": (typeb.restricted_descent_poly_b, ("n", "k"), "y"),
    "Pk": (typea.p_poly, ("k",), "x"),
    "Qk": (typea.q_poly, ("k",), "x"),
    "Rnk": (typea.r_poly, ("n", "k"), "x"),
    "Tk": (typeb.t_poly, ("k",), "x"),
    "Ttildek": (typeb.t_tilde_poly, ("k",), "x"),
    "Hk": (typeb.h_poly, ("k",), "x"),
    "Gk": (typeb.g_poly, ("k",), "x"),
    "Fk": (typeb.f_poly, ("k",), "x"),
}

ARRAY_KINDS: dict[str, Callable[[int], CoeffArray]] = {
    "t": typeb.array_t,
    "h": typeb.array_h,
    "f": typeb.array_f,
    "g": typeb.array_g,
    "hprime": typeb.array_h_prime,
    "hdprime": typeb.array_h_dprime,
}


class UsageError(Exception):
    pass


# serialization

def poly_to_json(p: IntLaurentPoly) -> list[list[Any]]:
    return [[e, str(c)] for e, c in p.terms()]


def poly_from_json(terms: Sequence[Sequence[Any]]) -> IntLaurentPoly:
    return IntLaurentPoly.from_terms((int(e), int(c)) for e, c in terms)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _dump_csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def render_array(arr: CoeffArray) -> str:
    """Right-aligned text table, row 0 first."""
    width = max(len(str(v)) for row in arr.entries for v in row)
    return "".join(" ".join(str(v).rjust(width) for v in row) + "\n" for row in arr.entries)


# commands

def cmd_poly(args) -> tuple[str, int]:
    builder, needed, var = POLY_KINDS[args.kind]
    params = {}
    for name in needed:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"poly {args.kind} requires --{name}")
        params[name] = value
    try:
        p = builder(**params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return _dump_json({"kind": "polynomial", "name": args.kind, "params": params,
                           "variable": var, "terms": poly_to_json(p)}), EXIT_OK
    if args.format == "csv":
        return _dump_csv([["exponent", "coefficient"], *([e, c] for e, c in p.terms())]), EXIT_OK
    return p.to_text(var) + "\n", EXIT_OK


def cmd_array(args) -> tuple[str, int]:
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    arr = ARRAY_KINDS[args.kind](args.k)
    if args.format == "json":
        return _dump_json({
            "kind": "array", "name": args.kind, "params": {"k": args.k},
            "rows": arr.rows, "cols": arr.cols, "stride": arr.stride, "base": arr.base,
            "entries": [[str(v) for v in row] for row in arr.entries],
        }), EXIT_OK
    if args.format == "csv":
        return _dump_csv(arr.tolist()), EXIT_OK
    return render_array(arr), EXIT_OK


def cmd_phi(args) -> tuple[str, int]:
    try:
        pi = parse_permutation(args.perm)
        steps = phi_trace(pi, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    image = steps[-1].image
    if args.format == "json":
        doc: dict[str, Any] = {"kind": "bijection", "k": args.k, "input": list(pi), "image": list(image)}
        if args.trace:
            doc["trace"] = [
                {"prefix": list(s.prefix), "i": s.i, "j": s.j, "i_target": s.i_target,
                 "j_target": s.j_target, "inserted": s.inserted, "image": list(s.image)}
                for s in steps
            ]
        return _dump_json(doc), EXIT_OK
    if args.format == "csv":
        rows: list[list[Any]] = [["prefix", "i", "j", "i_target", "j_target", "inserted", "image"]]
        chosen = steps if args.trace else steps[-1:]
        rows += [[format_permutation(s.prefix), s.i, s.j, s.i_target, s.j_target, s.inserted,
                  format_permutation(s.image)] for s in chosen]
        return _dump_csv(rows), EXIT_OK
    out = format_permutation(image) + "\n"
    if args.trace:
        out += "".join(
            f"  {format_permutation(s.prefix):<{2 * len(pi)}} (i,j)=({s.i},{s.j}) -> ({s.i_target},{s.j_target})"
            f"  insert {s.inserted}  image {format_permutation(s.image)}\n"
            for s in steps
        )
    return out, EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    try:
        if args.table == "descent":
            if args.type == "A":
                tbl = enumeration.descent_table(enumeration.gen_bounded_perms(args.n, args.k))
            else:
                tbl = enumeration.descent_table(
                    enumeration.gen_bounded_signed_perms(args.n, args.k, allow_large=args.force),
                    enumeration.des_b)
            pairs = [[d, c] for d, c in tbl.counts.items()]
            header = ["descents", "count"]
        else:
            if args.type != "A":
                raise UsageError("refined tables are type A only")
            if args.n < 1:
                raise UsageError("refined tables need --n >= 1")
            rt = enumeration.refined_table(enumeration.gen_bounded_perms(args.n, args.k))
            pairs = [[i, last, c] for (i, last), c in rt.counts.items()]
            header = ["descents", "last", "count"]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return _dump_json({"kind": "table", "name": args.table, "type": args.type,
                           "params": {"n": args.n, "k": args.k}, "columns": header,
                           "rows": [[*r[:-1], str(r[-1])] for r in pairs]}), EXIT_OK
    if args.format == "csv":
        return _dump_csv([header, *pairs]), EXIT_OK
    return "".join(" ".join(str(v) for v in r) + "\n" for r in pairs), EXIT_OK


def _report_json(suite: str, results: list[CheckResult], timing: bool) -> str:
    checks = []
    for r in results:
        entry: dict[str, Any] = {"name": r.name, "params": r.params, "passed": r.passed}
        if timing:
            entry["seconds"] = round(r.seconds, 4)
        if r.detail is not None:
            entry["detail"] = r.detail
        if r.witness is not None:
            entry["witness"] = r.witness
        checks.append(entry)
    return _dump_json({"kind": "verification-report", "suite": suite,
                       "passed": all(r.passed for r in results), "checks": checks})


def cmd_verify(args) -> tuple[str, int]:
    try:
        cells = build_cells(args.suite, args.max_n, args.max_k, args.force)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = default_jobs() if args.jobs is None else args.jobs
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    results = run_cells(cells, jobs)
    status = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    timing = not args.no_timing
    if args.format == "json":
        return _report_json(args.suite, results, timing), status
    if args.format == "csv":
        rows: list[list[Any]] = [["check", "passed", "seconds", "witness"] if timing
                                 else ["check", "passed", "witness"]]
        for r in results:
            row = [r.label(), "pass" if r.passed else "FAIL"]
            if timing:
                row.append(f"{r.seconds:.4f}")
            rows.append(row + [r.witness or ""])
        return _dump_csv(rows), status
    lines = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.label()}"
        if r.detail:
            line += f"  {r.detail}"
        if timing:
            line += f"  [{r.seconds:.3f}s]"
        if r.witness:
            line += f"\n      witness: {r.witness}"
        lines.append(line)
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dropsize", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = {"choices": ("text", "json", "csv"), "default": "text"}

    p = sub.add_parser("poly", help="print a polynomial")
    p.add_argument("kind", choices=tuple(POLY_KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("array", help="print a coefficient array")
    p.add_argument("kind", choices=tuple(ARRAY_KINDS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(handler=cmd_array)

    p = sub.add_parser("phi", help="apply the class-pairing involution to a permutation")
    p.add_argument("perm", help='one-line notation, e.g. "1 2 3 5 4" or 12354')
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--format", **fmt)
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("table", help="enumerate and tabulate descent counts")
    p.add_argument("table", choices=("descent", "refined"))
    p.add_argument("--type", choices=("A", "B"), default="A")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true", help="allow type B n = 8")
    p.add_argument("--format", **fmt)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("typea", "typeb", "bijection", "arrays", "all"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--jobs", type=int, help="worker processes (default: $DROPSIZE_JOBS or 1)")
    p.add_argument("--force", action="store_true", help="lift desk-scale bounds")
    p.add_argument("--no-timing", action="store_true", help="omit wall times (byte-stable output)")
    p.add_argument("--format", **fmt)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, status = args.handler(args)
    except UsageError as exc:
        print(f"dropsize: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
