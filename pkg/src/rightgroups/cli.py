"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 inconclusive genus bounds,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import verify
from .algebra import SpecError, parse_generators, parse_group_spec
from .cayley import (
    SimpleGraph,
    cayley_color_graph,
    cayley_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph_isomorphic,
    read_edge_list,
    to_dot,
    to_edge_list,
)
from .topology import MalformedRotation, dumps_certificate, exact_genus, loads_certificate
from .topology.genus import DEFAULT_BUDGET

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOUNDS = 3
EXIT_FAILED = 4

_NAMED = re.compile(r"^(?:K(\d+)|K(\d+),(\d+)|C(\d+))$")


class UsageError(Exception):
    pass


def recognize(g: SimpleGraph) -> str | None:
    """Name ``g`` if it is a complete, complete bipartite or cycle graph."""
    n, degs = g.n, sorted(map(len, g.adj))
    candidates = [(f"K{n}", lambda: complete_graph(n))]
    if n >= 3:
        candidates.append((f"C{n}", lambda: cycle_graph(n)))
    if degs:
        a = degs[0]
        b = n - a
        if 0 < a <= b:
            candidates.append((f"K{a},{b}", lambda: complete_bipartite(a, b)))
    for name, build in candidates:
        h = build()
        if h.m == g.m and graph_isomorphic(g, h) is not None:
            return name
    return None


def _named_graph(text: str) -> SimpleGraph | None:
    m = _NAMED.match(text)
    if not m:
        return None
    if m.group(1):
        return complete_graph(int(m.group(1)))
    if m.group(2):
        return complete_bipartite(int(m.group(2)), int(m.group(3)))
    return cycle_graph(int(m.group(4)))


def load_graph(source: str, gens: str | None) -> SimpleGraph:
    """A graph from a file (edge list or certificate), a name like K5 / K3,3 / C8, or a group spec."""
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        try:
            if text.lstrip().startswith("rotation-certificate"):
                return loads_certificate(text).graph
            return read_edge_list(text)
        except (ValueError, MalformedRotation) as exc:
            raise UsageError(f"{source}: {exc}") from exc
    named = _named_graph(source)
    if named is not None:
        return named
    if gens is None:
        raise UsageError(f"{source!r} is not a readable file or graph name; group specs need --gens")
    try:
        s = parse_group_spec(source)
        return cayley_graph(s, parse_generators(source, gens))
    except (SpecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_cayley(args) -> int:
    try:
        s = parse_group_spec(args.spec)
        c = parse_generators(args.spec, args.gens)
        g = cayley_graph(s, c)
    except (SpecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    names = ", ".join(s.names[x] for x in c)
    kind = recognize(g)
    summary = f"Cay({s.label}, {{{names}}}): {g.n} vertices, {g.m} edges" + (f" ({kind})" if kind else "")
    if args.export is None:
        print(summary)
        return EXIT_OK
    artifact = to_dot(cayley_color_graph(s, c) if args.directed else g, s.label) \
        if args.export == "dot" else to_edge_list(g)
    if args.output:
        Path(args.output).write_text(artifact)
        print(summary)
    else:
        print(summary, file=sys.stderr)
        sys.stdout.write(artifact)
    return EXIT_OK


def cmd_genus(args) -> int:
    g = load_graph(args.graph, args.gens)
    bounds = exact_genus(g, budget=args.budget, effort=args.effort, seed=args.seed)
    if args.report == "json":
        print(json.dumps({"vertices": g.n, "edges": g.m, "lower": bounds.lower,
                          "lower_reason": bounds.lower_reason, "upper": bounds.upper,
                          "exact": bounds.exact, "expansions": bounds.expansions,
                          "notes": bounds.notes}, indent=2))
    else:
        print(f"{g.n} vertices, {g.m} edges: {bounds}")
        for note in bounds.notes:
            print(f"note: {note}")
    if args.certificate and bounds.certificate is not None:
        Path(args.certificate).write_text(dumps_certificate(bounds.certificate))
    return EXIT_OK if bounds.exact else EXIT_BOUNDS


def _suite_kwargs(name: str, args) -> dict:
    if name == "cyclic":
        return {"max_n": min(args.max_n, 8), "max_r": args.max_r}
    if name == "theorem":
        return {"max_n": args.max_n, "max_r": args.max_r, "budget": args.budget,
                "effort": args.effort, "seed": args.seed, "include_a5": not args.skip_a5}
    if name == "genus":
        return {"budget": args.budget}
    if name == "oracle":
        return {"max_n": min(args.max_n, 7)}
    return {}


def cmd_verify(args) -> int:
    names = args.only or list(verify.SUITES)
    unknown = [n for n in names if n not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(verify.SUITES)}")
    checks = []
    for name in names:
        checks += verify.SUITES[name](**_suite_kwargs(name, args))
    if args.report == "json":
        rows = [{"suite": c.suite, "check": c.name, "passed": c.passed, "detail": c.detail,
                 "seconds": round(c.seconds, 3)} for c in checks]
        table = next((c.data["rows"] for c in checks if "rows" in c.data), None)
        print(json.dumps({"checks": rows, "classification": table}, indent=2))
    else:
        for c in checks:
            print(c.line())
            if args.table and "rows" in c.data:
                for row in c.data["rows"]:
                    mark = "" if row["agrees"] else "  <-- disagrees"
                    print(f"    {row['group']:>8} r={row['r']}  {row['verdict']:<10} {row['rule']:<20}"
                          f" witness={row['witness']}{mark}")
        failed = sum(not c.passed for c in checks)
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rightgroups", description="Cayley graphs of right groups and their genus.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cayley", help="build Cay(S, C) and optionally export it")
    c.add_argument("spec", help="group spec such as Z6, D4, Z2xR3")
    c.add_argument("--gens", required=True, help="generators: indices, names or tuples like (1,*)")
    c.add_argument("--export", choices=("dot", "edges"))
    c.add_argument("--directed", action="store_true", help="export the color digraph instead")
    c.add_argument("--output", help="write the export here instead of stdout")
    c.set_defaults(func=cmd_cayley)

    g = sub.add_parser("genus", help="certified genus bounds for a graph")
    g.add_argument("graph", help="edge-list or certificate file, K<n>, K<a>,<b>, C<n>, or a group spec")
    g.add_argument("--gens", help="generators when the graph is given as a group spec")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    g.add_argument("--effort", type=int, default=5_000)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--report", choices=("text", "json"), default="text")
    g.add_argument("--certificate", help="write the best rotation system here")
    g.set_defaults(func=cmd_genus)

    v = sub.add_parser("verify-paper", help="run the verification suites")
    v.add_argument("--only", action="append", metavar="SUITE",
                   help=f"run just this suite (repeatable): {', '.join(verify.SUITES)}")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--max-r", type=int, default=5)
    v.add_argument("--budget", type=int, default=10**6)
    v.add_argument("--effort", type=int, default=5_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", choices=("text", "json"), default="text")
    v.add_argument("--table", action="store_true", help="print the classification table")
    v.add_argument("--skip-a5", action="store_true", help="leave A5 and Z2xA5 out of the cheap checks")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
