"""Command line front end.

Subcommands: analyze (parameter values per graph), family (excellent
families), verify (the claim suites), gen (catalogs as graph6 lines),
search (filtered catalog scans), convert (graph6 normalization).

Input is a file path, - for stdin, or an inline graph6 string. Reports
are JSON by default and deterministic: runtimes stay null unless
--timings is given, so repeated runs serialize identically. Exit codes:
0 success, 1 failed verification claims, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import __version__
from .canon import CANON_CAP, canonical_key
from .catalog import (
    CatalogQuery,
    generate_all_graphs,
    generate_regular,
    load_catalog,
    search,
)
from .claims import run_suite
from .domination import PARAM_IDS, Param, ParameterUndefinedError, min_sets
from .excellence import excellent_family, family_names, is_excellent
from .graph6 import Graph6Error, from_graph6, parse_lines, to_graph6
from .graphs import Graph, complete, cycle, edgeless, path
from .trees import enumerate_trees


def _canonical_graph6(g: Graph) -> str | None:
    # identity is the canonical representative when keying is exact
    if g.n > CANON_CAP:
        return None
    return canonical_key(g).graph6()


def _identity(index: int, g: Graph) -> dict:
    return {
        "index": index,
        "graph6": to_graph6(g),
        "canonical_graph6": _canonical_graph6(g),
    }


def _read_source(source: str) -> tuple[str, str]:
    """Resolve an input argument to (kind, text) or raise Graph6Error."""
    if source == "-":
        return "stdin", sys.stdin.read()
    if os.path.exists(source):
        with open(source, encoding="ascii") as fh:
            return source, fh.read()
    try:
        from_graph6(source)
    except Graph6Error:
        raise Graph6Error(f"no such file and not a graph6 string: {source!r}")
    return "inline", source


def _parse_input(source: str) -> tuple[str, list]:
    kind, text = _read_source(source)
    return kind, list(parse_lines(text))


def _pattern_graph(spec: str) -> Graph:
    """Named small graph (K3, E2, P4, C5) or a raw graph6 string."""
    if len(spec) >= 2 and spec[0] in "KEPC" and spec[1:].isdigit():
        n = int(spec[1:])
        builder = {"K": complete, "E": edgeless, "P": path, "C": cycle}[spec[0]]
        return builder(n)
    return from_graph6(spec)


def _emit(payload: dict, output: str, text_lines) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines(payload):
            print(line)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    return max(1, int(os.environ.get("DOMEXC_JOBS", "1")))


def _pmap(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _param_list(spec: str) -> list[Param]:
    if spec == "all":
        return [Param.from_id(pid) for pid in PARAM_IDS]
    return [Param.from_id(pid.strip()) for pid in spec.split(",")]


def _analyze_one(item: tuple[int, str], param_ids: tuple[str, ...]) -> dict:
    index, line = item
    g = from_graph6(line)
    entry = _identity(index, g)
    entry.update(
        {
            "order": g.n,
            "size": g.edge_count(),
            "degree_range": [g.min_degree(), g.max_degree()] if g.n else [None, None],
            "connected": g.is_connected(),
            "params": {},
        }
    )
    for pid in param_ids:
        par = Param.from_id(pid)
        try:
            res = min_sets(g, par)
        except ParameterUndefinedError as exc:
            entry["params"][pid] = {"defined": False, "reason": str(exc)}
            continue
        entry["params"][pid] = {
            "defined": True,
            "value": res.value,
            "optimal_sets": len(res.sets),
            "excellent": is_excellent(g, par, result=res),
        }
    return entry


def _family_one(item: tuple[int, str], pid: str) -> dict:
    index, line = item
    g = from_graph6(line)
    entry = _identity(index, g)
    par = Param.from_id(pid)
    try:
        fam = excellent_family(g, par)
    except ParameterUndefinedError as exc:
        entry.update({"param": pid, "defined": False, "reason": str(exc)})
        return entry
    entry.update(
        {
            "param": pid,
            "defined": True,
            "value": fam.value,
            "excellent": fam.excellent,
            "members": [
                {"name": name, "graph6": key.graph6()}
                for name, key in zip(family_names(fam), fam.members)
            ],
        }
    )
    return entry


def _graph_entries(source: str, worker, jobs: int) -> tuple[dict, list, bool]:
    kind, parsed = _parse_input(source)
    slots: list = [None] * len(parsed)
    pending = []
    had_error = False
    for pos, (lineno, item) in enumerate(parsed):
        if isinstance(item, Graph):
            pending.append((pos, (pos, to_graph6(item))))
        else:
            had_error = True
            slots[pos] = {"index": pos, "line": lineno, "error": str(item)}
    results = _pmap(worker, [payload for _, payload in pending], jobs)
    for (pos, _), result in zip(pending, results):
        slots[pos] = result
    return {"source": kind, "graphs": len(parsed)}, slots, had_error


def cmd_analyze(args) -> int:
    try:
        params = _param_list(args.param)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    worker = partial(_analyze_one, param_ids=tuple(p.id for p in params))
    try:
        meta, results, had_error = _graph_entries(args.input, worker, _jobs(args))
    except (OSError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"tool_version": __version__, "input": meta, "results": results}

    def lines(p):
        for r in p["results"]:
            if "error" in r:
                yield f"{r['index']}: line {r['line']}: error: {r['error']}"
                continue
            parts = []
            for pid, info in r["params"].items():
                if not info["defined"]:
                    parts.append(f"{pid}=undefined")
                    continue
                flag = "excellent" if info["excellent"] else "not excellent"
                parts.append(f"{pid}={info['value']} ({info['optimal_sets']} sets, {flag})")
            yield f"{r['index']}: {r['graph6']} n={r['order']} m={r['size']} " + "; ".join(parts)

    _emit(payload, args.output, lines)
    return 2 if had_error else 0


def cmd_family(args) -> int:
    if args.param not in PARAM_IDS:
        print(f"error: unknown parameter id {args.param!r}", file=sys.stderr)
        return 2
    worker = partial(_family_one, pid=args.param)
    try:
        meta, results, had_error = _graph_entries(args.input, worker, _jobs(args))
    except (OSError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"tool_version": __version__, "input": meta, "results": results}

    def lines(p):
        for r in p["results"]:
            if "error" in r:
                yield f"{r['index']}: line {r['line']}: error: {r['error']}"
            elif not r["defined"]:
                yield f"{r['index']}: {r['graph6']} {r['param']} undefined"
            elif not r["excellent"]:
                yield f"{r['index']}: {r['graph6']} {r['param']}={r['value']} not excellent"
            else:
                names = ", ".join(m["name"] for m in r["members"])
                yield f"{r['index']}: {r['graph6']} {r['param']}={r['value']} members: {names}"

    _emit(payload, args.output, lines)
    return 2 if had_error else 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, run_long=args.long, jobs=_jobs(args), timings=args.timings)
    results = [r.to_json() for r in reports]
    counts = {"pass": 0, "fail": 0, "skipped-long-running": 0}
    for r in reports:
        counts[r.status] += 1
    payload = {
        "tool_version": __version__,
        "input": {"suite": args.suite, "long": args.long or args.suite == "long"},
        "summary": counts,
        "results": results,
    }

    def lines(p):
        for r in p["results"]:
            yield f"{r['status']:20} {r['claim_id']}: {r['anchor']}"
            if r["status"] == "fail":
                yield f"{'':20}   expected: {json.dumps(r['expected'], sort_keys=True)}"
                yield f"{'':20}   computed: {json.dumps(r['computed'], sort_keys=True)}"
        s = p["summary"]
        yield (
            f"{s['pass']} passed, {s['fail']} failed, "
            f"{s['skipped-long-running']} skipped (long)"
        )

    _emit(payload, args.output, lines)
    return 1 if counts["fail"] else 0


def cmd_gen(args) -> int:
    try:
        if args.kind == "trees":
            graphs = enumerate_trees(args.n)
        elif args.kind == "all":
            graphs = generate_all_graphs(args.n, connected_only=args.connected).graphs
        else:
            if args.k is None:
                print("error: gen regular needs N and K", file=sys.stderr)
                return 2
            graphs = generate_regular(args.n, args.k, connected_only=args.connected).graphs
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for g in graphs:
        print(to_graph6(g))
    return 0


def _load_search_catalog(args):
    if args.catalog is not None:
        return load_catalog(args.catalog)
    if args.gen is not None:
        fields = args.gen.split(":")
        if fields[0] == "all" and len(fields) == 2:
            return generate_all_graphs(int(fields[1]), connected_only=args.connected)
        if fields[0] == "regular" and len(fields) == 3:
            return generate_regular(int(fields[1]), int(fields[2]), connected_only=args.connected)
        raise ValueError(f"bad gen spec {args.gen!r}; use all:N or regular:N:K")
    raise ValueError("search needs --catalog PATH or --gen SPEC")


def cmd_search(args) -> int:
    try:
        cat = _load_search_catalog(args)
        values = {}
        for clause in args.where or []:
            pid, _, raw = clause.partition("=")
            values[pid] = int(raw)
        query = CatalogQuery(
            param_values=values,
            excellent_for=args.excellent,
            pattern=_pattern_graph(args.pattern) if args.pattern else None,
            pattern_param=args.pattern_param,
            connected=True if args.connected else None,
            include_family=args.include_family,
        )
        matches = search(cat, query)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    results = []
    for m in matches:
        entry = _identity(m.index, m.graph)
        entry["values"] = m.values
        if m.family is not None:
            entry["family"] = {
                "excellent": m.family.excellent,
                "members": family_names(m.family),
            }
        results.append(entry)
    payload = {
        "tool_version": __version__,
        "input": {"source": args.catalog or args.gen, "size": len(cat)},
        "results": results,
    }

    def lines(p):
        for r in p["results"]:
            vals = " ".join(f"{k}={v}" for k, v in sorted(r["values"].items()))
            tail = ""
            if "family" in r:
                tail = " members: " + ", ".join(r["family"]["members"])
            yield f"{r['index']}: {r['graph6']} {vals}{tail}"
        yield f"{len(p['results'])} of {p['input']['size']} matched"

    _emit(payload, args.output, lines)
    return 0


def cmd_convert(args) -> int:
    try:
        kind, parsed = _parse_input(args.input)
    except (OSError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    results = []
    had_error = False
    for pos, (lineno, item) in enumerate(parsed):
        if not isinstance(item, Graph):
            had_error = True
            results.append({"index": pos, "line": lineno, "error": str(item)})
            continue
        entry = _identity(pos, item)
        if args.to == "edges":
            entry["order"] = item.n
            entry["edges"] = [list(e) for e in item.edges()]
        results.append(entry)
    payload = {"tool_version": __version__, "input": {"source": kind}, "results": results}

    def lines(p):
        for r in p["results"]:
            if "error" in r:
                yield f"{r['index']}: line {r['line']}: error: {r['error']}"
            elif args.to == "canonical":
                yield r["canonical_graph6"] or r["graph6"]
            elif args.to == "edges":
                yield json.dumps({"order": r["order"], "edges": r["edges"]})
            else:
                yield r["graph6"]

    _emit(payload, args.output, lines)
    return 2 if had_error else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domexc", description="domination excellence analysis for small graphs"
    )
    parser.add_argument("--version", action="version", version=f"domexc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=("json", "text"), default="json")
        p.add_argument("--jobs", type=int, default=None, help="worker count (env DOMEXC_JOBS)")

    p = sub.add_parser("analyze", help="parameter values, set counts, excellence flags")
    p.add_argument("input", help="graph6 file, - for stdin, or inline graph6")
    p.add_argument("--param", default="gamma", help="comma separated parameter ids, or all")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="excellent family members per graph")
    p.add_argument("input", help="graph6 file, - for stdin, or inline graph6")
    p.add_argument("--param", default="gamma")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run the recorded claim suite")
    p.add_argument("--suite", choices=("quick", "paper", "long"), default="paper")
    p.add_argument("--long", action="store_true", help="run claims tagged long-running")
    p.add_argument("--timings", action="store_true", help="fill runtime fields")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a catalog as graph6 lines")
    p.add_argument("kind", choices=("trees", "all", "regular"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="filter a catalog by values, excellence, patterns")
    p.add_argument("--catalog", default=None, help="graph6 catalog file")
    p.add_argument("--gen", default=None, help="all:N or regular:N:K")
    p.add_argument("--where", action="append", default=None, metavar="PARAM=VALUE")
    p.add_argument("--excellent", default=None, metavar="PARAM")
    p.add_argument("--pattern", default=None, help="K3, E2, P4, C5 or graph6")
    p.add_argument("--pattern-param", default="gamma")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--include-family", action="store_true")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", help="normalize graph6, canonical forms, edge lists")
    p.add_argument("input", help="graph6 file, - for stdin, or inline graph6")
    p.add_argument("--to", choices=("graph6", "canonical", "edges"), default="graph6")
    common(p)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
