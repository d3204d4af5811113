"""Command-line harness: gen, metrics, paths, congestion, instance, solve,
bench, adversary, verify.

Every command reads and writes the JSON formats owned by the library
modules and exits nonzero on any validation or invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import adversary, bench, graphs, pathsystems, serialize, \
    solvers, staircase, verify
from .errors import CapabilityError


def _load_or_build_graph(args) -> tuple:
    """Returns (kind, Graph, group table or None)."""
    if getattr(args, "graph", None):
        return "file", serialize.load_graph(args.graph), _load_table(args)
    kind = getattr(args, "kind", None)
    if kind is None:
        raise ValueError("provide --graph FILE or --kind KIND")
    table = _load_table(args)
    if kind == "hypercube":
        if args.dim is None:
            raise ValueError("--kind hypercube needs --dim")
        return kind, graphs.hypercube_graph(args.dim), table
    if kind == "grid":
        if args.side is None:
            raise ValueError("--kind grid needs --side")
        return kind, graphs.grid_graph(args.side), table
    if kind in ("clique", "ring", "barbell"):
        if args.n is None:
            raise ValueError(f"--kind {kind} needs --n")
        builder = {"clique": graphs.clique_graph, "ring": graphs.ring_graph,
                   "barbell": graphs.barbell_graph}[kind]
        return kind, builder(args.n), table
    if kind == "random_regular":
        if args.n is None or args.d is None:
            raise ValueError("--kind random_regular needs --n and --d")
        return kind, graphs.random_regular_graph(args.n, args.d,
                                                 args.seed or 0), table
    if kind == "cayley":
        if table is None:
            raise ValueError("--kind cayley needs --group FILE")
        gens = json.loads(Path(args.group).read_text()).get("generators")
        if gens is None:
            raise ValueError("group file must carry a generators list")
        return kind, graphs.cayley_graph(table, set(gens)), table
    raise ValueError(f"unknown kind {kind!r}")


def _load_table(args):
    group = getattr(args, "group", None)
    if group:
        data = json.loads(Path(group).read_text())
        return tuple(tuple(row) for row in data["table"])
    if getattr(args, "kind", None) == "ring" and getattr(args, "n", None):
        return graphs.cyclic_group(args.n)
    return None


def _emit(args, data) -> None:
    text = json.dumps(data, indent=1, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args):
    kind, g, _ = _load_or_build_graph(args)
    _emit(args, serialize.graph_to_dict(g))
    return 0


def cmd_metrics(args):
    _, g, _ = _load_or_build_graph(args)
    data = {"n": g.n}
    data.update(graphs.graph_metrics(g))
    if args.expansion:
        data["edge_expansion"] = str(graphs.edge_expansion_exact(g))
    if args.separation:
        data["separation_number"] = graphs.separation_number_exact(g)
    _emit(args, data)
    return 0


def _build_paths(args):
    kind, g, table = _load_or_build_graph(args)
    if getattr(args, "paths", None):
        ps = serialize.load_path_system(args.paths)
        if ps.n != g.n:
            raise ValueError("path system size does not match the graph")
        return kind, g, ps
    return kind, g, bench.build_path_system(g, args.strategy, table=table)


def cmd_paths(args):
    _, _, ps = _build_paths(args)
    _emit(args, serialize.path_system_to_dict(ps))
    return 0


def cmd_congestion(args):
    _, _, ps = _build_paths(args)
    prof = pathsystems.congestion(ps)
    _emit(args, {
        "max_vertex": prof.max_vertex,
        "max_edge": prof.max_edge,
        "per_vertex": {str(v): c for v, c in sorted(prof.per_vertex.items())},
        "per_edge": {f"{u}-{v}": c for (u, v), c in sorted(prof.per_edge.items())},
    })
    return 0


def cmd_instance(args):
    g = serialize.load_graph(args.graph)
    ps = serialize.load_path_system(args.paths)
    if ps.n != g.n:
        raise ValueError("path system size does not match the graph")
    inst = staircase.sample_hard_instance(g, ps, args.L, args.seed)
    values = flags = None
    if args.materialize:
        values, flags = inst.values, inst.flags
    _emit(args, serialize.instance_to_dict(args.graph, args.paths,
                                           inst.milestones, inst.bit,
                                           values, flags))
    return 0


def _load_instance(path):
    data = serialize.load_json(path)
    g = serialize.load_graph(data["graph"])
    ps = serialize.load_path_system(data["paths"])
    inst = staircase.make_instance(tuple(data["milestones"]), data["bit"], ps, g)
    return g, inst


def cmd_solve(args):
    g, inst = _load_instance(args.instance)
    oracle = solvers.QueryOracle(inst.oracle)
    if args.solver == "descent":
        result = solvers.steepest_descent(g, oracle, args.start)
    else:
        t = "auto" if args.t in (None, "auto") else int(args.t)
        result = solvers.warm_start_descent(g, oracle, t=t, seed=args.seed)
    out = {
        "answer": result.answer,
        "queries": result.queries,
        "raw_calls": oracle.raw_calls,
        "correct": result.answer == inst.minimum,
    }
    if args.transcript:
        rows = [[v, ans[0], ans[1]] if isinstance(ans, tuple) else [v, ans, None]
                for v, ans in oracle.transcript]
        Path(args.transcript).write_text(
            json.dumps({"queries": rows}, indent=1) + "\n")
    _emit(args, out)
    return 0 if out["correct"] else 1


def cmd_bench(args):
    kind, g, table = _load_or_build_graph(args)
    specs = []
    for name in args.solver:
        if name == "warm-start":
            t = "auto" if args.t in (None, "auto") else int(args.t)
            specs.append(bench.SolverSpec(name, t=t))
        else:
            specs.append(bench.SolverSpec(name))
    cfg = bench.BenchConfig(kind, g, args.strategy, args.L or 0, tuple(specs),
                            trials=args.trials, master_seed=args.seed,
                            workers=args.workers, c=args.c or 0)
    report = bench.run_bench(cfg, table=table)
    text = (bench.report_to_csv(report) if args.format == "csv"
            else bench.report_to_json(report))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if not all(r["correct"] for r in report.rows):
        sys.stderr.write("bench: some solver runs returned a wrong answer\n")
        return 1
    return 0


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def cmd_adversary(args):
    if args.family == "matrix":
        fam, rel = adversary.family_matrix_game(args.k)
    else:
        _, g, table = _load_or_build_graph(args)
        ps = bench.build_path_system(g, args.strategy, table=table)
        fam, rel, _ = adversary.family_staircase(g, ps, args.L)
    vb = adversary.variant_bound_exhaustive(fam, rel)
    ab = adversary.aaronson_vmin(fam, rel)
    _emit(args, {
        "family": fam.name,
        "size": fam.size,
        "min_ratio": _frac(vb.min_ratio),
        "variant_bound": _frac(vb.bound),
        "vmin": _frac(ab.v_min),
        "aaronson_bound": _frac(ab.bound),
        "argmin_subset": list(vb.argmin),
    })
    return 0


def cmd_verify(args):
    results = verify.run_verify(args.scope, budget=args.budget, seed=args.seed)
    failed = [r for r in results if not r.passed]
    report = {
        "checks": [
            {"scope": r.scope, "name": r.name, "passed": r.passed,
             "detail": r.detail}
            for r in results
        ],
        "passed": len(results) - len(failed),
        "failed": len(failed),
    }
    _emit(args, report)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"[{status}] {r.scope}/{r.name}"
        if r.detail:
            line += f": {r.detail}"
        sys.stderr.write(line + "\n")
    return 1 if failed else 0


def _add_graph_args(p, with_strategy=False):
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--kind", choices=["hypercube", "grid", "clique", "ring",
                                      "barbell", "cayley", "random_regular"])
    p.add_argument("--dim", type=int)
    p.add_argument("--side", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--group", help="group JSON file: {table, generators}")
    if with_strategy:
        p.add_argument("--strategy", default="bfs",
                       choices=["bfs", "hypercube", "cayley", "brute"])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lsqlab",
        description="local-search query-complexity laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph as JSON")
    _add_graph_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("metrics", help="max degree, diameter, exact metrics")
    _add_graph_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--expansion", action="store_true")
    p.add_argument("--separation", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("paths", help="build an all-pairs path system")
    _add_graph_args(p, with_strategy=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--paths", help="existing path-system JSON to re-emit")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("congestion", help="congestion profile of a system")
    _add_graph_args(p, with_strategy=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--paths", help="path-system JSON file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_congestion)

    p = sub.add_parser("instance", help="sample a hard staircase instance")
    p.add_argument("--graph", required=True)
    p.add_argument("--paths", required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--materialize", action="store_true",
                   help="inline values and flags")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_instance)

    p = sub.add_parser("solve", help="run a solver on an instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--solver", default="descent",
                   choices=["descent", "warm-start"])
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--t", default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--transcript", help="dump the query transcript here")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("bench", help="batch benchmark over sampled instances")
    _add_graph_args(p, with_strategy=True)
    p.add_argument("--L", type=int, help="milestone staircase quasi-segments")
    p.add_argument("--c", type=int,
                   help="cluster staircase legs (grid arrangement mode)")
    p.add_argument("--solver", action="append", required=True,
                   choices=["descent", "warm-start"])
    p.add_argument("--t", default="auto")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("adversary", help="exact adversary bound report")
    _add_graph_args(p, with_strategy=True)
    p.add_argument("--family", default="matrix",
                   choices=["matrix", "staircase"])
    p.add_argument("--k", type=int, default=4, help="matrix game size")
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_adversary)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--scope", default="all",
                   choices=["all", *verify.SUITES])
    p.add_argument("--budget", type=int, default=None,
                   help="sample count for randomized checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError, CapabilityError) as exc:
        sys.stderr.write(f"lsqlab {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
