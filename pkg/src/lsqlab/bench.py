"""Deterministic benchmark harness for solvers on sampled hard instances.

Each trial draws a staircase instance and runs every configured solver on
a fresh oracle.  Trial seeds derive from the master seed by a fixed
splitmix64 counter mix, so runs are byte-identical across repeat
invocations and worker counts; rows are sorted by (solver, trial) before
writing.

Seed derivation (64-bit, documented so other implementations can match):
  trial_seed(t)        = splitmix64(master_seed + (t + 1) * GOLDEN)
  solver_seed(t, s)    = splitmix64(trial_seed(t) + (s + 1) * GOLDEN)
with GOLDEN = 0x9E3779B97F4A7C15 and splitmix64 the standard finalizer.
"""

from __future__ import annotations

import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .graphs import Graph, graph_metrics
from .pathsystems import (
    PathSystem,
    cayley_path_system,
    congestion,
    hypercube_path_system,
    min_congestion_oracle,
    shortest_path_system,
)
from .solvers import QueryOracle, steepest_descent, warm_start_descent
from .staircase import sample_hard_instance

GOLDEN = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1

CSV_COLUMNS = ("graph_kind", "n", "delta", "g", "L",
               "solver", "trial", "seed", "queries", "correct")


def splitmix64(x: int) -> int:
    """Standard splitmix64 finalizer on a 64-bit state."""
    z = (x + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial: int) -> int:
    return splitmix64((master_seed + (trial + 1) * GOLDEN) & MASK64)


def solver_seed(tseed: int, solver_index: int) -> int:
    return splitmix64((tseed + (solver_index + 1) * GOLDEN) & MASK64)


@dataclass(frozen=True)
class SolverSpec:
    """A named solver configuration: descent (from vertex 1) or warm-start."""

    name: str
    t: object = "auto"  # warm-start sample budget
    start: int = 1      # descent start vertex

    def run(self, g: Graph, oracle: QueryOracle, seed: int):
        if self.name == "descent":
            return steepest_descent(g, oracle, self.start)
        if self.name == "warm-start":
            return warm_start_descent(g, oracle, t=self.t, seed=seed)
        raise ValueError(f"unknown solver {self.name!r}")


@dataclass(frozen=True)
class BenchConfig:
    """Benchmark setup: either milestone staircases (L >= 1, over the chosen
    path-system strategy) or cluster staircases (c >= 1, over the grid path
    arrangement; the graph must be a square grid)."""

    graph_kind: str
    graph: Graph
    strategy: str
    L: int
    solvers: tuple
    trials: int
    master_seed: int
    workers: int = 1
    c: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials: must be >= 1")
        if (self.L >= 1) == (self.c >= 1):
            raise ValueError("exactly one of L and c must be >= 1")
        if self.L >= 1 and self.L + 1 > self.graph.n:
            raise ValueError(f"L: need 1 <= L <= n - 1, got {self.L}")
        if self.c >= 1:
            side = math.isqrt(self.graph.n)
            if side * side != self.graph.n:
                raise ValueError("c: arrangement mode needs a square grid graph")
            if 2 * self.c + 1 > side:
                raise ValueError(f"c: need 2c + 1 <= side, got c={self.c}")
        if not self.solvers:
            raise ValueError("solvers: at least one solver required")
        if not (0 <= self.master_seed <= MASK64):
            raise ValueError("master_seed: must fit in 64 bits")
        if self.workers < 1:
            raise ValueError("workers: must be >= 1")


@dataclass(frozen=True)
class BenchReport:
    rows: tuple          # dicts keyed by CSV_COLUMNS
    aggregates: dict     # solver -> {mean, median, p90}
    meta: dict = field(default_factory=dict)


def build_path_system(g: Graph, strategy: str, table=None) -> PathSystem:
    if strategy == "bfs":
        return shortest_path_system(g)
    if strategy == "hypercube":
        return hypercube_path_system(g)
    if strategy == "cayley":
        if table is None:
            raise ValueError("cayley strategy needs a group table")
        return cayley_path_system(g, table)
    if strategy == "brute":
        return min_congestion_oracle(g)[1]
    raise ValueError(f"unknown path-system strategy {strategy!r}")


def _run_trial(cfg: BenchConfig, sampler, delta: int, g_cong: int,
               trial: int) -> list:
    tseed = trial_seed(cfg.master_seed, trial)
    inst = sampler(tseed)
    rows = []
    for s_idx, spec in enumerate(cfg.solvers):
        oracle = QueryOracle(inst.oracle)
        result = spec.run(cfg.graph, oracle, solver_seed(tseed, s_idx))
        rows.append({
            "graph_kind": cfg.graph_kind,
            "n": cfg.graph.n,
            "delta": delta,
            "g": g_cong,
            "L": cfg.L if cfg.L >= 1 else cfg.c,
            "solver": spec.name,
            "trial": trial,
            "seed": tseed,
            "queries": result.queries,
            "correct": result.answer == inst.minimum,
        })
    return rows


def _percentile_90(sorted_vals: list) -> int:
    idx = (9 * len(sorted_vals) + 9) // 10 - 1  # ceil(0.9 * k) - 1
    return sorted_vals[idx]


def run_bench(cfg: BenchConfig, table=None) -> BenchReport:
    """Run all trials and aggregate; deterministic under the master seed.

    In arrangement mode (c >= 1) instances are cluster staircases over the
    grid path arrangement and the g column is 0 (no path system is built).
    """
    delta = graph_metrics(cfg.graph)["max_degree"]
    if cfg.c >= 1:
        from .separation import grid_path_arrangement, sample_separation_instance

        pa = grid_path_arrangement(math.isqrt(cfg.graph.n))
        g_cong = 0
        sampler = lambda seed: sample_separation_instance(pa, cfg.c, seed)
    else:
        ps = build_path_system(cfg.graph, cfg.strategy, table=table)
        g_cong = congestion(ps).max_vertex
        sampler = lambda seed: sample_hard_instance(cfg.graph, ps, cfg.L, seed)
    if cfg.workers == 1:
        per_trial = [_run_trial(cfg, sampler, delta, g_cong, t)
                     for t in range(cfg.trials)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            per_trial = list(pool.map(
                lambda t: _run_trial(cfg, sampler, delta, g_cong, t),
                range(cfg.trials),
            ))
    rows = [row for batch in per_trial for row in batch]
    rows.sort(key=lambda r: (r["solver"], r["trial"]))

    aggregates = {}
    for spec in cfg.solvers:
        qs = sorted(r["queries"] for r in rows if r["solver"] == spec.name)
        k = len(qs)
        mid = (qs[(k - 1) // 2] + qs[k // 2]) / 2
        aggregates[spec.name] = {
            "mean": sum(qs) / k,
            "median": mid,
            "p90": _percentile_90(qs),
        }
    meta = {
        "graph_kind": cfg.graph_kind,
        "n": cfg.graph.n,
        "strategy": cfg.strategy if cfg.c < 1 else "arrangement",
        "L": cfg.L,
        "c": cfg.c,
        "trials": cfg.trials,
        "master_seed": cfg.master_seed,
    }
    return BenchReport(tuple(rows), aggregates, meta)


def report_to_csv(report: BenchReport) -> str:
    out = io.StringIO()
    out.write(",".join(CSV_COLUMNS) + "\n")
    for r in report.rows:
        vals = [str(r[c]).lower() if c == "correct" else str(r[c])
                for c in CSV_COLUMNS]
        out.write(",".join(vals) + "\n")
    return out.getvalue()


def report_to_json(report: BenchReport) -> str:
    data = {
        "meta": report.meta,
        "rows": [dict(r) for r in report.rows],
        "aggregates": report.aggregates,
    }
    return json.dumps(data, indent=1, sort_keys=True) + "\n"
