"""Command-line front end.

Subcommands: check (property verdict on supplied graphs), construct (emit
named families as graph6), extremal (exact or construction-bound values),
reproduce (the named verification suites), and table (value grids).

Every run produces a RunReport whose results payload is deterministic for
identical inputs; wall time and the report envelope carry the only
run-to-run variation.  --json writes the full report, --csv writes value
tables for the extremal and table subcommands.  The exit code is 0 exactly
when no expectation failed and no error occurred.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter

from . import __version__
from .constructions import FAMILIES, parse_construction
from .graphs import Graph, Graph6Error, from_graph6, to_graph6
from .paths import has_equal_degree_p3, has_equal_degree_path
from .reproduce import DEFAULT_SEED, SUITES, run_suite
from .search import SearchConfig, compute_p, lower_bound_from_constructions

__all__ = ["RunReport", "main"]

_CSV_HEADER = "ell,n,value,exact,witness_count"


@dataclass(frozen=True)
class RunReport:
    command: str
    version: str
    params: dict
    results: dict
    wall_ms: float

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "version": self.version,
             "params": self.params, "results": self.results,
             "wall_ms": self.wall_ms},
            indent=1, sort_keys=True)


def _digest(parts: list[str]) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode())
        h.update(b"\0")
    return h.hexdigest()


def _search_config(args) -> SearchConfig:
    mode = "constructions_only" if getattr(args, "constructions_only", False) else "exhaustive"
    return SearchConfig(workers=args.workers, mode=mode, cache_dir=args.cache)


def _load_inputs(args) -> list[tuple[str, Graph]]:
    """The graphs named on the command line, as (source label, graph)."""
    if args.construct:
        return [(args.construct, parse_construction(args.construct))]
    if args.graph6:
        return [(args.graph6, from_graph6(args.graph6.encode("ascii")))]
    lines = Path(args.file).read_text().split()
    if not lines:
        raise ValueError(f"no graphs in {args.file}")
    return [(s, from_graph6(s.encode("ascii"))) for s in lines]


def _cmd_check(args) -> tuple[dict, dict, int]:
    inputs = _load_inputs(args)
    checks = []
    for label, g in inputs:
        if args.len == 3:
            wit = has_equal_degree_p3(g)
        else:
            wit = has_equal_degree_path(g, args.len)
        entry = {
            "input": label,
            "order": g.order,
            "edges": g.edge_count(),
            "verdict": "present" if wit is not None else "absent",
            "witness": None,
        }
        if wit is not None:
            entry["witness"] = {
                "endpoints": list(wit.endpoints),
                "shared_degree": wit.shared_degree,
                "path": list(wit.path),
            }
        checks.append(entry)
        line = f"{label}: order {g.order}, {g.edge_count()} edges: {entry['verdict']}"
        if wit is not None:
            path = "-".join(map(str, wit.path))
            line += (f"; endpoints {wit.endpoints[0]} and {wit.endpoints[1]}"
                     f" share degree {wit.shared_degree}; path {path}")
        print(line)
    params = {"len": args.len,
              "input_digest": _digest([label for label, _ in inputs])}
    return params, {"checks": checks}, 0


def _cmd_construct(args) -> tuple[dict, dict, int]:
    graphs = []
    for spec in args.spec:
        g = parse_construction(spec)
        form = to_graph6(g).decode("ascii")
        graphs.append({"spec": spec, "graph6": form,
                       "order": g.order, "edges": g.edge_count()})
        print(form)
    params = {"specs": list(args.spec), "input_digest": _digest(list(args.spec))}
    return params, {"graphs": graphs}, 0


def _extremal_rows(rows) -> str:
    out = [_CSV_HEADER]
    for r in rows:
        out.append(f"{r['ell']},{r['n']},{r['value']},{r['exact']},{len(r['witnesses'])}")
    return "\n".join(out) + "\n"


def _cmd_extremal(args) -> tuple[dict, dict, int]:
    cfg = _search_config(args)
    res = compute_p(args.len, args.order, cfg)
    payload = res.payload()
    kind = "exact" if res.exact else "lower bound"
    if res.degenerate:
        kind += ", degenerate length"
    print(f"p_{args.len}({args.order}) = {res.value}  ({kind})")
    print(f"extremal classes: {len(res.witnesses)}")
    for w in res.witnesses:
        print(f"  {w}")
    if res.classes_enumerated:
        print(f"classes enumerated: {res.classes_enumerated}")
    params = {"len": args.len, "order": args.order,
              "constructions_only": cfg.mode == "constructions_only",
              "input_digest": _digest([str(args.len), str(args.order), cfg.mode])}
    return params, payload, 0


def _cmd_reproduce(args) -> tuple[dict, dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        rows.extend(run_suite(name, scale=args.scale, workers=args.workers,
                              seed=args.seed))
    width = max(len(r.name) for r in rows)
    for r in rows:
        mark = {"ok": "pass", "mismatch": "FAIL", "report": "info"}[r.status]
        line = f"[{mark}] {r.name:<{width}}  expected {r.expected}"
        if r.status != "ok":
            line += f"  observed {r.observed}"
        print(line)
    failures = [r for r in rows if r.status == "mismatch"]
    print(f"{len(rows) - len(failures)}/{len(rows)} checks passed")
    for r in failures:
        print(f"mismatch: {r.suite}: {r.name}: expected {r.expected}, observed {r.observed}")
    params = {"suite": args.suite, "scale": args.scale, "seed": args.seed,
              "input_digest": _digest([args.suite, str(args.scale), str(args.seed)])}
    results = {
        "rows": [{"suite": r.suite, "name": r.name, "status": r.status,
                  "expected": r.expected, "observed": r.observed}
                 for r in rows],
        "failures": len(failures),
    }
    return params, results, len(failures)


def _cmd_table(args) -> tuple[dict, dict, int]:
    cfg = _search_config(args)
    rows = []
    for ell in args.len:
        for n in range(args.min_order, args.max_order + 1):
            if cfg.mode == "constructions_only":
                res = lower_bound_from_constructions(ell, n)
            else:
                res = compute_p(ell, n, cfg)
            rows.append(res.payload())
    print(f"{'len':>4} {'order':>6} {'value':>6} {'exact':>6} {'classes':>8}")
    for r in rows:
        print(f"{r['ell']:>4} {r['n']:>6} {r['value']:>6} "
              f"{str(r['exact']):>6} {len(r['witnesses']):>8}")
    params = {"len": list(args.len), "min_order": args.min_order,
              "max_order": args.max_order,
              "constructions_only": cfg.mode == "constructions_only",
              "input_digest": _digest([str(args.len), str(args.min_order),
                                       str(args.max_order), cfg.mode])}
    return params, {"rows": rows}, 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equipath",
        description="equal-degree fixed-length path avoidance toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, metavar="N",
                        help="worker processes for enumeration (default 1)")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help="directory for extremal result caching")
    common.add_argument("--json", metavar="PATH", default=None,
                        help="write the full run report as JSON")
    common.add_argument("--csv", metavar="PATH", default=None,
                        help="write the value table as CSV (extremal, table)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, metavar="S",
                        help="seed for randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="decide the equal-degree path property")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STR", help="a single graph6 string")
    src.add_argument("--construct", metavar="SPEC",
                     help="a construction such as half_graph:5")
    src.add_argument("--file", metavar="PATH",
                     help="file with one graph6 string per line")
    p.add_argument("--len", type=int, required=True, metavar="L",
                   help="exact path length in edges")

    p = sub.add_parser("construct", parents=[common],
                       help="emit named constructions as graph6")
    p.add_argument("spec", nargs="+",
                   help="FAMILY:PARAMS, families: " + ", ".join(sorted(FAMILIES)))

    p = sub.add_parser("extremal", parents=[common],
                       help="maximum edges avoiding the property")
    p.add_argument("--len", type=int, required=True, metavar="L")
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument("--constructions-only", action="store_true",
                   help="report a verified construction bound instead of searching")

    p = sub.add_parser("reproduce", parents=[common],
                       help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--scale", type=float, default=1.0,
                   help="sweep-extent multiplier (default 1.0)")

    p = sub.add_parser("table", parents=[common],
                       help="value grid over lengths and orders")
    p.add_argument("--len", type=int, nargs="+", required=True, metavar="L")
    p.add_argument("--min-order", type=int, default=2, metavar="N")
    p.add_argument("--max-order", type=int, required=True, metavar="N")
    p.add_argument("--constructions-only", action="store_true")
    return parser


_DISPATCH = {
    "check": _cmd_check,
    "construct": _cmd_construct,
    "extremal": _cmd_extremal,
    "reproduce": _cmd_reproduce,
    "table": _cmd_table,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = perf_counter()
    try:
        params, results, failures = _DISPATCH[args.command](args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = RunReport(args.command, __version__, params, results,
                       (perf_counter() - t0) * 1e3)
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n")
    if args.csv:
        if args.command == "extremal":
            Path(args.csv).write_text(_extremal_rows([results]))
        elif args.command == "table":
            Path(args.csv).write_text(_extremal_rows(results["rows"]))
        else:
            print("note: --csv applies to extremal and table only", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
