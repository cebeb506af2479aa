"""Command-line front end: counting, verification, series, tree dumps.

Subcommands
-----------
count       avoider counts for one size, by any counting method
verify      cross-check every counting route and identity, exit 1 on any gap
conjecture  compare statistic-refined counts of two same-length patterns
gf          print one path series, with a path-enumeration cross-check
tree        dump an explicit generating tree as JSON

Counts serialize as decimal strings so consumers with 64-bit integers cannot
overflow.  Exit codes: 0 all good, 1 a verification inequality was found,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import shlex
import sys
import time
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from . import __version__, gentree, gf, oracle
from .core import Pattern

__all__ = ["main", "build_parser", "RunManifest"]


@dataclass
class RunManifest:
    """Everything needed to rerun a command and audit its output."""

    command: str
    patterns: list[str]
    n_min: int
    n_max: int
    j: int | None
    methods: list[str]
    degree_bound: int | None
    workers: int
    wall_time_s: float
    version: str

    def as_dict(self) -> dict[str, Any]:
        return asdict(self)


def dumps_payload(doc: dict[str, Any]) -> str:
    """Canonical JSON encoding; parsing and re-encoding is byte-identical."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(
    doc: dict[str, Any],
    columns: Sequence[str],
    fmt: str,
    output: str | None,
) -> None:
    if fmt == "json":
        text = dumps_payload(doc)
    elif fmt == "csv":
        lines = ["# manifest: " + json.dumps(doc["manifest"], sort_keys=True)]
        lines.append(",".join(columns))
        for row in doc["rows"]:
            lines.append(
                ",".join("" if row[c] is None else str(row[c]) for c in columns)
            )
        text = "\n".join(lines) + "\n"
    else:
        cells = [
            ["" if row[c] is None else str(row[c]) for c in columns]
            for row in doc["rows"]
        ]
        widths = [
            max(len(col), *(len(row[i]) for row in cells)) if cells else len(col)
            for i, col in enumerate(columns)
        ]
        lines = [
            "  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()
        ]
        for row in cells:
            lines.append(
                "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            )
        lines.append("# manifest: " + json.dumps(doc["manifest"], sort_keys=True))
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _resolve_workers(args: argparse.Namespace) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("SIGPERM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parse_pattern(parser: argparse.ArgumentParser, text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError  # parser.error always exits


_TREE_PATTERN_TEXTS = {"1234", "2143"}


def _count_one(n: int, j: int, pattern: Pattern, method: str, workers: int) -> int:
    if method == "brute":
        return oracle.count_avoiders(n, j, pattern, workers=workers)
    if method == "tree":
        return gentree.level_counts(pattern, j, n - j)[-1]
    return gf.avoider_count_from_series(n, j, pattern)


def cmd_count(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    pattern = _parse_pattern(parser, args.pattern)
    method = args.method
    if args.n < 0:
        parser.error("--n must be nonnegative")
    if method in ("tree", "gf") and str(pattern) not in _TREE_PATTERN_TEXTS:
        parser.error(
            f"method {method!r} supports only patterns 1234 and 2143, "
            f"not {pattern}"
        )
    if method == "formula":
        if str(pattern) != "1234":
            parser.error("method 'formula' evaluates Egge's sum for 1234 only")
        if args.j is not None:
            parser.error(
                "method 'formula' gives the total only; "
                "the statistic-refined counts have no closed form here"
            )
    if args.j is not None and not 0 <= args.j <= args.n:
        parser.error(f"--j {args.j} outside 0..{args.n}")

    workers = _resolve_workers(args)
    started = time.perf_counter()
    rows: list[dict[str, Any]] = []
    if method == "formula":
        rows.append(
            {
                "n": args.n,
                "j": None,
                "pattern": str(pattern),
                "method": method,
                "count": str(oracle.egge_formula(args.n)),
            }
        )
    elif args.j is not None:
        rows.append(
            {
                "n": args.n,
                "j": args.j,
                "pattern": str(pattern),
                "method": method,
                "count": str(_count_one(args.n, args.j, pattern, method, workers)),
            }
        )
    else:
        total = 0
        for j in range(args.n + 1):
            c = _count_one(args.n, j, pattern, method, workers)
            total += c
            rows.append(
                {
                    "n": args.n,
                    "j": j,
                    "pattern": str(pattern),
                    "method": method,
                    "count": str(c),
                }
            )
        rows.append(
            {
                "n": args.n,
                "j": None,
                "pattern": str(pattern),
                "method": method,
                "count": str(total),
            }
        )
    manifest = RunManifest(
        command=shlex.join(args.argv),
        patterns=[str(pattern)],
        n_min=args.n,
        n_max=args.n,
        j=args.j,
        methods=[method],
        degree_bound=None if method != "gf" else args.n + 1,
        workers=workers,
        wall_time_s=round(time.perf_counter() - started, 6),
        version=__version__,
    )
    doc = {"manifest": manifest.as_dict(), "rows": rows}
    _emit(doc, ("n", "j", "pattern", "method", "count"), args.format, args.output)
    return 0


def _verify_checks(max_n: int, workers: int) -> list[dict[str, Any]]:
    """Run every cross-method identity; one result dict per named check."""
    p1234 = Pattern.parse("1234")
    p2143 = Pattern.parse("2143")
    checks: list[dict[str, Any]] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append(
            {"name": name, "status": "pass" if ok else "fail", "detail": detail}
        )

    brute: dict[str, list[tuple[int, ...]]] = {}
    for pattern in (p1234, p2143):
        brute[str(pattern)] = [
            oracle.avoider_counts(n, pattern, workers=workers)
            for n in range(max_n + 1)
        ]

    for pattern in (p1234, p2143):
        ok, detail = True, f"n <= {max_n}"
        for n in range(max_n + 1):
            row = brute[str(pattern)][n]
            tree_row = tuple(
                gentree.level_counts(pattern, j, n - j)[-1] for j in range(n + 1)
            )
            gf_row = tuple(
                gf.avoider_count_from_series(n, j, pattern) for j in range(n + 1)
            )
            if not row == tree_row == gf_row:
                ok = False
                detail = (
                    f"n={n}: brute={row} tree={tree_row} gf={gf_row}"
                )
                break
        record(f"cross-method[{pattern}]", ok, detail)

    ok, detail = True, f"n <= {max_n}"
    for n in range(max_n + 1):
        if brute["1234"][n] != brute["2143"][n]:
            ok = False
            detail = f"n={n}: 1234={brute['1234'][n]} 2143={brute['2143'][n]}"
            break
    record("refined-wilf", ok, detail)

    ok, detail = True, f"n <= {max_n}"
    for n in range(max_n + 1):
        expected = oracle.egge_formula(n)
        totals = {p: sum(brute[p][n]) for p in brute}
        if any(t != expected for t in totals.values()):
            ok = False
            detail = f"n={n}: totals={totals} formula={expected}"
            break
    record("egge-total", ok, detail)

    ok, detail = True, f"n <= {max_n}"
    for n in range(max_n + 1):
        slices = {}
        direct = {}
        for pattern in (p1234, p2143):
            row = brute[str(pattern)][n]
            slices[str(pattern)] = sum(
                row[j] for j in range(n + 1) if (n - j) % 2 == 0
            )
            direct[str(pattern)] = oracle.type_d_avoiders(n, pattern)
        if not (
            direct["1234"] == slices["1234"]
            and direct["2143"] == slices["2143"]
            and direct["1234"] == direct["2143"]
        ):
            ok = False
            detail = f"n={n}: direct={direct} slices={slices}"
            break
    record("type-d-slice", ok, detail)

    ok, detail = True, "k<=5 q<=5 gamma1<=5 len<=4 at degree 10"
    cache_a, cache_b = gf.SeriesCache(10), gf.SeriesCache(10)
    for g1 in range(1, 6):
        for gamma in gf.signatures(g1, 4):
            for k in range(6):
                for q in range(1, 6):
                    if cache_a.series(p2143, k, q, gamma) != cache_b.series(
                        p1234, k, q, gamma
                    ):
                        ok = False
                        detail = f"k={k} q={q} gamma={gamma}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    record("series-grid", ok, detail)
    return checks


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    workers = _resolve_workers(args)
    started = time.perf_counter()
    checks = _verify_checks(args.max_n, workers)
    manifest = RunManifest(
        command=shlex.join(args.argv),
        patterns=["1234", "2143"],
        n_min=0,
        n_max=args.max_n,
        j=None,
        methods=["brute", "tree", "gf", "formula"],
        degree_bound=10,
        workers=workers,
        wall_time_s=round(time.perf_counter() - started, 6),
        version=__version__,
    )
    doc = {"manifest": manifest.as_dict(), "rows": checks}
    _emit(doc, ("name", "status", "detail"), args.format, args.output)
    return 0 if all(c["status"] == "pass" for c in checks) else 1


def cmd_conjecture(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    p1 = _parse_pattern(parser, args.p1)
    p2 = _parse_pattern(parser, args.p2)
    if len(p1) != len(p2):
        parser.error("the two patterns must have equal length")
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    if args.max_n > args.guard and not args.allow_long:
        embeddings = sum(2**n * math.factorial(n) for n in range(args.max_n + 1))
        parser.error(
            f"--max-n {args.max_n} exceeds the cost guard {args.guard}: "
            f"about {2 * embeddings} containment checks; "
            "pass --allow-long to run anyway"
        )
    workers = _resolve_workers(args)
    started = time.perf_counter()
    rows: list[dict[str, Any]] = []
    all_equal = True
    for n in range(args.max_n + 1):
        row1 = oracle.avoider_counts(n, p1, workers=workers)
        row2 = oracle.avoider_counts(n, p2, workers=workers)
        for j in range(n + 1):
            equal = row1[j] == row2[j]
            all_equal = all_equal and equal
            rows.append(
                {
                    "n": n,
                    "j": j,
                    "count1": str(row1[j]),
                    "count2": str(row2[j]),
                    "equal": equal,
                }
            )
    manifest = RunManifest(
        command=shlex.join(args.argv),
        patterns=[str(p1), str(p2)],
        n_min=0,
        n_max=args.max_n,
        j=None,
        methods=["brute"],
        degree_bound=None,
        workers=workers,
        wall_time_s=round(time.perf_counter() - started, 6),
        version=__version__,
    )
    doc = {"manifest": manifest.as_dict(), "rows": rows}
    _emit(doc, ("n", "j", "count1", "count2", "equal"), args.format, args.output)
    return 0 if all_equal else 1


def cmd_gf(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    pattern = _parse_pattern(parser, args.pattern)
    if args.format == "csv":
        parser.error("csv applies to the tabular subcommands; use table or json")
    if str(pattern) not in _TREE_PATTERN_TEXTS:
        parser.error(f"series exist only for patterns 1234 and 2143, not {pattern}")
    try:
        gamma = gf.validate_signature(
            int(tok) for tok in args.gamma.split(",") if tok.strip()
        )
    except ValueError as exc:
        parser.error(f"bad --gamma {args.gamma!r}: {exc}")
    if args.k < 0 or args.q < 1 or args.degree < 0:
        parser.error("need --k >= 0, --q >= 1, --degree >= 0")

    started = time.perf_counter()
    series = gf.f_series(pattern, args.k, args.q, gamma, args.degree)
    cross_check: dict[str, Any] | None = None
    start = (gamma[0], gamma[0] + args.k, args.q)
    if args.degree <= 6 and start[1] <= 4 and args.q <= 3:
        max_points = min(8, args.degree + len(gamma))
        depth = max_points - len(gamma)
        if depth >= 0:
            profile = gf.path_profile(pattern, start, max_points)
            agree = all(
                series.coefficient(d) == profile.get((gamma, d), 0)
                for d in range(depth + 1)
            )
            cross_check = {
                "start": list(start),
                "degrees_checked": depth,
                "agrees": agree,
            }
    manifest = RunManifest(
        command=shlex.join(args.argv),
        patterns=[str(pattern)],
        n_min=0,
        n_max=0,
        j=None,
        methods=["gf"],
        degree_bound=args.degree,
        workers=1,
        wall_time_s=round(time.perf_counter() - started, 6),
        version=__version__,
    )
    doc = {
        "manifest": manifest.as_dict(),
        "k": args.k,
        "q": args.q,
        "gamma": list(gamma),
        "coefficients": [str(c) for c in series.coeffs],
        "series": str(series),
        "cross_check": cross_check,
    }
    if args.format == "json":
        text = dumps_payload(doc)
    else:
        lines = [str(series)]
        if cross_check is not None:
            status = "ok" if cross_check["agrees"] else "MISMATCH"
            lines.append(
                f"# path cross-check through degree "
                f"{cross_check['degrees_checked']}: {status}"
            )
        lines.append("# manifest: " + json.dumps(doc["manifest"], sort_keys=True))
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if cross_check is not None and not cross_check["agrees"]:
        return 1
    return 0


def _tree_as_dict(node: gentree.PermTreeNode, pattern: Pattern) -> dict[str, Any]:
    label = gentree.stats(node.perm, pattern)
    return {
        "perm": str(node.perm),
        "label": [label.x, label.y, label.z],
        "children": [_tree_as_dict(c, pattern) for c in node.children],
    }


def cmd_tree(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    pattern = _parse_pattern(parser, args.pattern)
    if args.format == "csv":
        parser.error("csv applies to the tabular subcommands; use table or json")
    if str(pattern) not in _TREE_PATTERN_TEXTS:
        parser.error(f"trees exist only for patterns 1234 and 2143, not {pattern}")
    started = time.perf_counter()
    try:
        root = gentree.build_tree(pattern, args.j, args.depth)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError
    manifest = RunManifest(
        command=shlex.join(args.argv),
        patterns=[str(pattern)],
        n_min=args.j,
        n_max=args.j + args.depth,
        j=args.j,
        methods=["tree"],
        degree_bound=None,
        workers=1,
        wall_time_s=round(time.perf_counter() - started, 6),
        version=__version__,
    )
    doc = {"manifest": manifest.as_dict(), "tree": _tree_as_dict(root, pattern)}
    text = dumps_payload(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigperm",
        description="Exact enumeration of pattern-avoiding signed permutations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("table", "json", "csv"), default="table"
        )
        p.add_argument("--output", help="write the payload to this file")
        p.add_argument(
            "--threads",
            type=int,
            help="brute-force worker processes "
            "(default: SIGPERM_THREADS or all cores)",
        )

    p_count = sub.add_parser("count", help="avoider counts for one size")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--j", type=int, help="fix the statistic; omit for the full row")
    p_count.add_argument("--pattern", required=True)
    p_count.add_argument(
        "--method", choices=("brute", "tree", "gf", "formula"), default="brute"
    )
    common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="cross-check all counting routes")
    p_verify.add_argument("--max-n", type=int, default=5)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser(
        "conjecture", help="compare refined counts of two patterns"
    )
    p_conj.add_argument("--p1", required=True)
    p_conj.add_argument("--p2", required=True)
    p_conj.add_argument("--max-n", type=int, default=5)
    p_conj.add_argument(
        "--allow-long", action="store_true", help="override the cost guard"
    )
    p_conj.add_argument(
        "--guard", type=int, default=6, help="largest size run without --allow-long"
    )
    common(p_conj)
    p_conj.set_defaults(func=cmd_conjecture)

    p_gf = sub.add_parser("gf", help="print one path series")
    p_gf.add_argument("--pattern", required=True)
    p_gf.add_argument("--k", type=int, required=True)
    p_gf.add_argument("--q", type=int, required=True)
    p_gf.add_argument("--gamma", required=True, help="comma-separated signature")
    p_gf.add_argument("--degree", type=int, default=8)
    common(p_gf)
    p_gf.set_defaults(func=cmd_gf)

    p_tree = sub.add_parser("tree", help="dump an explicit tree as JSON")
    p_tree.add_argument("--pattern", required=True)
    p_tree.add_argument("--j", type=int, required=True)
    p_tree.add_argument("--depth", type=int, required=True)
    common(p_tree)
    p_tree.set_defaults(func=cmd_tree)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = ["sigperm"] + argv
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
