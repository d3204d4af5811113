"""Invariant verification suites for every module, runnable by scope.

Each check returns a CheckResult with a counterexample description on
failure; run_verify aggregates them.  Sampled checks draw from seeded
generators, so a given budget always examines the same cases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import adversary, bench, graphs, pathsystems, separation, staircase
from .serialize import (
    graph_from_dict,
    graph_to_dict,
    path_system_from_dict,
    path_system_to_dict,
)


@dataclass(frozen=True)
class CheckResult:
    scope: str
    name: str
    passed: bool
    detail: str = ""


def _ok(scope, name, detail=""):
    return CheckResult(scope, name, True, detail)


def _fail(scope, name, detail):
    return CheckResult(scope, name, False, detail)


def good_sequences(n: int, L: int):
    """All good milestone sequences (1, x_2, ..., x_{L+1}) over [n]."""
    for rest in itertools.permutations(range(2, n + 1), L):
        yield (1, *rest)


def all_sequences(n: int, L: int):
    for rest in itertools.product(range(1, n + 1), repeat=L):
        yield (1, *rest)


def _small_graph_zoo():
    zoo = [("K3", graphs.clique_graph(3)), ("K4", graphs.clique_graph(4)),
           ("K5", graphs.clique_graph(5)), ("C4", graphs.ring_graph(4)),
           ("C5", graphs.ring_graph(5)), ("grid2", graphs.grid_graph(2)),
           ("hypercube3", graphs.hypercube_graph(3)),
           ("barbell8", graphs.barbell_graph(8))]
    return zoo


# ---------------------------------------------------------------------------
# graph scope
# ---------------------------------------------------------------------------


def check_graph_determinism(samples=0, seed=0):
    specs = [
        graphs.GraphSpec("hypercube", {"dim": 3}),
        graphs.GraphSpec("grid", {"side": 3}),
        graphs.GraphSpec("barbell", {"n": 8}),
        graphs.GraphSpec("random_regular", {"n": 10, "d": 3, "seed": 7}),
    ]
    import json

    for spec in specs:
        g1, g2 = graphs.build_graph(spec), graphs.build_graph(spec)
        s1 = json.dumps(graph_to_dict(g1), sort_keys=True)
        s2 = json.dumps(graph_to_dict(g2), sort_keys=True)
        if s1 != s2:
            return _fail("graph", "build_determinism", f"{spec.kind} differs")
    return _ok("graph", "build_determinism")


def check_bfs_metric_properties(samples=0, seed=0):
    for name, g in _small_graph_zoo():
        dists = {v: graphs.bfs_distances(g, v) for v in g.vertices()}
        for u in g.vertices():
            for v in g.vertices():
                for x in g.vertices():
                    if dists[u][v] > dists[u][x] + dists[x][v]:
                        return _fail("graph", "bfs_triangle",
                                     f"{name}: d({u},{v}) > d({u},{x})+d({x},{v})")
        for u, v in g.edges:
            for x in g.vertices():
                if abs(dists[u][x] - dists[v][x]) > 1:
                    return _fail("graph", "bfs_triangle",
                                 f"{name}: edge ({u},{v}) jumps at {x}")
    return _ok("graph", "bfs_triangle")


def check_expansion_invariance(samples=20, seed=0):
    rng = random.Random(seed)
    for name, g in [("K4", graphs.clique_graph(4)), ("C6", graphs.ring_graph(6)),
                    ("grid3", graphs.grid_graph(3))]:
        beta = graphs.edge_expansion_exact(g)
        if beta <= 0:
            return _fail("graph", "expansion_positive", f"{name}: beta={beta}")
        for _ in range(max(2, samples // 10)):
            perm = list(g.vertices())
            rng.shuffle(perm)
            relabeled = graphs.relabel(g, {v: perm[v - 1] for v in g.vertices()})
            if graphs.edge_expansion_exact(relabeled) != beta:
                return _fail("graph", "expansion_positive",
                             f"{name}: changed under relabeling")
    return _ok("graph", "expansion_positive")


def check_separation_invariance(samples=20, seed=0):
    rng = random.Random(seed)
    for name, g in [("barbell8", graphs.barbell_graph(8)),
                    ("grid3", graphs.grid_graph(3))]:
        s = graphs.separation_number_exact(g)
        for _ in range(max(2, samples // 10)):
            perm = list(g.vertices())
            rng.shuffle(perm)
            relabeled = graphs.relabel(g, {v: perm[v - 1] for v in g.vertices()})
            if graphs.separation_number_exact(relabeled) != s:
                return _fail("graph", "separation_invariance",
                             f"{name}: changed under relabeling")
    return _ok("graph", "separation_invariance")


# ---------------------------------------------------------------------------
# paths scope
# ---------------------------------------------------------------------------


def check_congestion_range(samples=0, seed=0):
    for name, g in _small_graph_zoo():
        if g.n > 8:
            continue
        ps = pathsystems.shortest_path_system(g)
        prof = pathsystems.congestion(ps)
        if not (g.n <= prof.max_vertex <= g.n * g.n):
            return _fail("paths", "congestion_range",
                         f"{name}: g={prof.max_vertex} outside [n, n^2]")
    return _ok("paths", "congestion_range")


def check_oracle_lower_bounds(samples=0, seed=0):
    for name, g in [("path3", graphs.from_edges(3, [(1, 2), (2, 3)])),
                    ("K4", graphs.clique_graph(4)), ("C4", graphs.ring_graph(4))]:
        g_star, opt_ps = pathsystems.min_congestion_oracle(g)
        lex = pathsystems.congestion(pathsystems.shortest_path_system(g)).max_vertex
        if pathsystems.congestion(opt_ps).max_vertex != g_star:
            return _fail("paths", "oracle_lower_bound",
                         f"{name}: oracle system does not attain g*")
        if lex < g_star:
            return _fail("paths", "oracle_lower_bound",
                         f"{name}: shortest system beats the oracle")
    return _ok("paths", "oracle_lower_bound")


def check_cayley_uniform(samples=0, seed=0):
    cases = [
        ("C5", graphs.cyclic_group(5)),
        ("C6", graphs.cyclic_group(6)),
        ("Z2xZ2", graphs.direct_product_group(graphs.cyclic_group(2),
                                              graphs.cyclic_group(2))),
    ]
    for name, table in cases:
        if name.startswith("C"):
            k = len(table)
            gen_set = {2, k} if k > 2 else {2}
        else:
            gen_set = {2, 3}
        g = graphs.cayley_graph(table, gen_set)
        ps = pathsystems.cayley_path_system(g, table)
        prof = pathsystems.congestion(ps)
        per = set(prof.per_vertex.values())
        if len(per) != 1:
            return _fail("paths", "cayley_uniform", f"{name}: non-uniform {per}")
        diam = graphs.graph_metrics(g)["diameter"]
        if prof.max_vertex > (diam + 1) * g.n:
            return _fail("paths", "cayley_uniform",
                         f"{name}: {prof.max_vertex} > (d+1)n")
    return _ok("paths", "cayley_uniform")


def check_hypercube_congestion(samples=0, seed=0):
    for b in (1, 2, 3, 4):
        g = graphs.hypercube_graph(b)
        ps = pathsystems.hypercube_path_system(g)
        expected = Fraction(g.n) * (1 + Fraction(b, 2))
        got = pathsystems.congestion(ps).max_vertex
        if got != expected:
            return _fail("paths", "hypercube_congestion",
                         f"dim {b}: {got} != {expected}")
    return _ok("paths", "hypercube_congestion")


def check_pathsystem_roundtrip(samples=0, seed=0):
    for name, g in [("C5", graphs.ring_graph(5)), ("K4", graphs.clique_graph(4))]:
        ps = pathsystems.shortest_path_system(g)
        back = path_system_from_dict(path_system_to_dict(ps))
        if back.paths != ps.paths:
            return _fail("paths", "roundtrip", f"{name}: path table changed")
        g2 = graph_from_dict(graph_to_dict(g))
        if g2.edges != g.edges or g2.n != g.n:
            return _fail("paths", "roundtrip", f"{name}: graph changed")
    return _ok("paths", "roundtrip")


def check_psi_identity(samples=0, seed=0):
    for name, g in [("path3", graphs.from_edges(3, [(1, 2), (2, 3)])),
                    ("K4", graphs.clique_graph(4)), ("grid2", graphs.grid_graph(2))]:
        ps = pathsystems.shortest_path_system(g)
        prof = pathsystems.congestion(ps)
        for v in g.vertices():
            psi = pathsystems.num_paths_through(ps, v)
            if sum(psi.values()) != prof.per_vertex[v]:
                return _fail("paths", "psi_identity", f"{name}: vertex {v}")
    return _ok("paths", "psi_identity")


# ---------------------------------------------------------------------------
# staircase scope
# ---------------------------------------------------------------------------


def unique_minimum_violation(g, values, expected_end):
    """Counterexample text if values has minima other than expected_end."""
    minima = staircase.local_minima(g, values)
    if minima != {expected_end}:
        return f"minima {sorted(minima)} != {{{expected_end}}}"
    return None


def check_unique_local_minimum(samples=200, seed=0):
    cases = []
    for n in (3, 4, 5):
        cases.append((f"K{n}", graphs.clique_graph(n)))
        if n >= 3:
            cases.append((f"C{n}", graphs.ring_graph(n)))
    cases.append(("grid2", graphs.grid_graph(2)))
    for name, g in cases:
        ps = pathsystems.shortest_path_system(g)
        for L in (1, 2, 3):
            for x in all_sequences(g.n, L):
                inst = staircase.make_instance(x, 0, ps, g)
                if not staircase.validate_function(inst.values, inst.staircase.walk, g):
                    return _fail("staircase", "unique_local_minimum",
                                 f"{name} x={x}: function not valid")
                bad = unique_minimum_violation(g, inst.values, inst.minimum)
                if bad:
                    return _fail("staircase", "unique_local_minimum",
                                 f"{name} x={x}: {bad}")
    rng = random.Random(seed)
    for dim in (4, 6, 8):
        g = graphs.hypercube_graph(dim)
        ps = pathsystems.hypercube_path_system(g)
        L = max(1, int(g.n ** 0.5) - 1)
        for _ in range(max(1, samples // 3)):
            inst = staircase.sample_hard_instance(g, ps, L, rng.getrandbits(64))
            bad = unique_minimum_violation(g, inst.values, inst.minimum)
            if bad:
                return _fail("staircase", "unique_local_minimum",
                             f"hypercube{dim} x={inst.milestones}: {bad}")
    return _ok("staircase", "unique_local_minimum")


def _good_instances(g, ps, L):
    return [staircase.make_instance(x, b, ps, g)
            for x in good_sequences(g.n, L) for b in (0, 1)]


def _pair_weight_tables(insts, n):
    size = len(insts)
    r_v = {}
    r_tilde_v = {}
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            for v in range(1, n + 1):
                _, rv, rtv = staircase.distinguishing_weights(
                    v, insts[i], insts[j], n)
                if rv:
                    r_v[(i, j, v)] = rv
                if rtv:
                    r_tilde_v[(i, j, v)] = rtv
    return r_v, r_tilde_v


def check_rv_twice_rtilde(samples=1000, seed=0):
    """sum r_v <= 2 sum r~_v over subsets of good functions."""
    for n, L, exhaustive in ((4, 1, True), (4, 2, True), (5, 1, True), (5, 2, False)):
        g = graphs.clique_graph(n)
        ps = pathsystems.shortest_path_system(g)
        insts = _good_instances(g, ps, L)
        size = len(insts)
        r_v, r_tilde_v = _pair_weight_tables(insts, n)
        if exhaustive:
            subsets = range(1, 1 << size)
        else:
            rng = random.Random(seed)
            subsets = (rng.getrandbits(size) for _ in range(samples))
        for mask in subsets:
            members = [i for i in range(size) if (mask >> i) & 1]
            for v in range(1, n + 1):
                lhs = sum(r_v.get((i, j, v), 0)
                          for i in members for j in members)
                rhs = sum(r_tilde_v.get((i, j, v), 0)
                          for i in members for j in members)
                if lhs > 2 * rhs:
                    return _fail("staircase", "rv_twice_rtilde",
                                 f"n={n} L={L} v={v} Z={members}: {lhs} > 2*{rhs}")
    return _ok("staircase", "rv_twice_rtilde")


def check_m_large(samples=0, seed=0):
    for n in (4, 5):
        for L in (1, 2):
            lower = staircase.ONE_OVER_2E_UPPER * (L + 1) * n ** (L + 1)
            for x in good_sequences(n, L):
                total = sum(
                    staircase.relation_congestion(x, 0, y, 1, n)
                    for y in all_sequences(n, L)
                )
                if total < lower:
                    return _fail("staircase", "m_large",
                                 f"n={n} L={L} x={x}: M={total} < {lower}")
                if n == 4 and L == 1 and total != 24:
                    return _fail("staircase", "m_large",
                                 f"n=4 L=1 x={x}: M={total} != 24")
    return _ok("staircase", "m_large")


def check_count_denominator(samples=0, seed=0):
    for n in (4, 5, 6):
        for L in (1, 2, 3):
            if L + 1 > n:
                continue
            for x in good_sequences(n, L):
                for j in range(1, L + 1):
                    actual = sum(
                        1 for y in all_sequences(n, L)
                        if staircase.is_good(y)
                        and staircase.shared_prefix_length(x, y) == j
                    )
                    expected = staircase.count_good_with_prefix(x, j, n)
                    if actual != expected:
                        return _fail("staircase", "count_denominator",
                                     f"n={n} L={L} x={x} j={j}: {actual} != {expected}")
    return _ok("staircase", "count_denominator")


def check_tail_count_bound(samples=0, seed=0):
    for n in (4, 5):
        gset = [graphs.clique_graph(n), graphs.ring_graph(n)]
        for g in gset:
            ps = pathsystems.shortest_path_system(g)
            g_cong = pathsystems.congestion(ps).max_vertex
            for L in (1, 2):
                staircases = {y: staircase.build_staircase(y, ps)
                              for y in all_sequences(n, L)}
                for x in all_sequences(n, L):
                    for j in range(1, L + 1):
                        for v in g.vertices():
                            actual = sum(
                                1 for y, s in staircases.items()
                                if staircase.shared_prefix_length(x, y) == j
                                and v in staircase.tail(j, s)
                            )
                            psi = pathsystems.num_paths_through(ps, v)[x[j - 1]]
                            bound = staircase.tail_count_bound(psi, g_cong, n, L, j)
                            if actual > bound:
                                return _fail(
                                    "staircase", "tail_count_bound",
                                    f"n={n} L={L} x={x} j={j} v={v}: "
                                    f"{actual} > {bound}")
    return _ok("staircase", "tail_count_bound")


def check_qz_bound(samples=300, seed=0):
    """q(Z) <= |Z| * 6 * g * n^L on good-only subsets."""
    rng = random.Random(seed)
    for n, L in ((4, 1), (4, 2), (5, 1), (5, 2)):
        g = graphs.clique_graph(n)
        ps = pathsystems.shortest_path_system(g)
        g_cong = pathsystems.congestion(ps).max_vertex
        insts = _good_instances(g, ps, L)
        size = len(insts)
        r_v, _ = _pair_weight_tables(insts, n)
        for _ in range(samples):
            mask = rng.getrandbits(size)
            members = [i for i in range(size) if (mask >> i) & 1]
            if not members:
                continue
            q = max(
                sum(r_v.get((i, j, v), 0) for i in members for j in members)
                for v in g.vertices()
            )
            cap = len(members) * 6 * g_cong * n ** L
            if q > cap:
                return _fail("staircase", "qz_bound",
                             f"n={n} L={L} Z={members}: q={q} > {cap}")
    return _ok("staircase", "qz_bound")


def check_sampler_marginals(samples=10000, seed=0):
    """Position-2 milestone marginal is uniform over 2..n (3-sigma test)."""
    n, L = 10, 3
    rng = random.Random(seed)
    counts = {v: 0 for v in range(2, n + 1)}
    for _ in range(samples):
        x = staircase.sample_milestones(n, L, rng)
        counts[x[1]] += 1
    p = 1 / (n - 1)
    sigma = (samples * p * (1 - p)) ** 0.5
    for v, c in counts.items():
        if abs(c - samples * p) > 3 * sigma:
            return _fail("staircase", "sampler_marginals",
                         f"vertex {v}: count {c} vs mean {samples * p:.1f}")
    return _ok("staircase", "sampler_marginals")


# ---------------------------------------------------------------------------
# separation scope
# ---------------------------------------------------------------------------


def check_grid_arrangements(samples=0, seed=0):
    for side in (2, 3, 4):
        pa = separation.grid_path_arrangement(side)
        problems = separation.arrangement_violations(pa, pa.graph)
        if problems:
            return _fail("separation", "grid_arrangements",
                         f"side {side}: {problems[0]}")
    return _ok("separation", "grid_arrangements")


def check_separation_validity(samples=50, seed=0):
    pa3 = separation.grid_path_arrangement(3)
    for x in itertools.product(range(1, 4), repeat=2):
        seq = (1, *x)
        inst = separation.make_separation_instance(seq, 0, pa3, pa3.graph)
        if not staircase.validate_function(inst.values, inst.staircase.walk,
                                           pa3.graph):
            return _fail("separation", "validity", f"side 3 x={seq}: invalid")
        bad = unique_minimum_violation(pa3.graph, inst.values, inst.minimum)
        if bad:
            return _fail("separation", "validity", f"side 3 x={seq}: {bad}")
    rng = random.Random(seed)
    pa4 = separation.grid_path_arrangement(4)
    for _ in range(samples):
        c = rng.choice((1, 2))
        seq = (1, *(rng.randrange(1, 5) for _ in range(2 * c)))
        inst = separation.make_separation_instance(seq, rng.randrange(2),
                                                   pa4, pa4.graph)
        walk = inst.staircase.walk
        if walk[0] != pa4.v_start:
            return _fail("separation", "validity", f"x={seq}: wrong start")
        for a, b in zip(walk, walk[1:]):
            if not pa4.graph.has_edge(a, b):
                return _fail("separation", "validity",
                             f"x={seq}: non-edge ({a},{b})")
        bad = unique_minimum_violation(pa4.graph, inst.values, inst.minimum)
        if bad:
            return _fail("separation", "validity", f"side 4 x={seq}: {bad}")
    return _ok("separation", "validity")


def check_separation_m_large(samples=0, seed=0):
    checked = 0
    for m in (4, 5, 6):
        for c in (1, 2):
            if 2 * c + 1 > m:
                continue  # no good sequences exist
            lower = staircase.ONE_OVER_2E_UPPER * (c + 1) * m ** (2 * c + 1)
            for x in good_sequences(m, 2 * c):
                total = sum(
                    separation.relation_separation(x, 0, y, 1, m)
                    for y in all_sequences(m, 2 * c)
                )
                if total < lower:
                    return _fail("separation", "m_large",
                                 f"m={m} c={c} x={x}: M={total} < {lower}")
                checked += 1
    return _ok("separation", "m_large", f"{checked} good sequences")


def check_separation_count(samples=0, seed=0):
    for m in (4, 5, 6):
        for c in (1, 2):
            if 2 * c + 1 > m:
                continue
            for x in good_sequences(m, 2 * c):
                for j in range(1, 2 * c + 1):
                    actual = sum(
                        1 for y in all_sequences(m, 2 * c)
                        if staircase.is_good(y)
                        and staircase.shared_prefix_length(x, y) == j
                    )
                    expected = separation.count_good_with_prefix_separation(x, j, m)
                    if actual != expected:
                        return _fail("separation", "count_formula",
                                     f"m={m} c={c} x={x} j={j}: "
                                     f"{actual} != {expected}")
    return _ok("separation", "count_formula")


def check_parameter_bound(samples=0, seed=0):
    hand = [((162, 1), 9), ((0, 5), 1), ((8, 1), 2), ((7, 1), 1), ((200, 2), 7)]
    for (s, d), want in hand:
        got = separation.arrangement_parameter_bound(s, d)
        if got != want:
            return _fail("separation", "parameter_bound",
                         f"({s},{d}): {got} != {want}")
    return _ok("separation", "parameter_bound")


# ---------------------------------------------------------------------------
# adversary scope
# ---------------------------------------------------------------------------


def check_matrix_game_laws(samples=50, seed=0):
    rng = random.Random(seed)
    for k in (2, 3, 4):
        fam, rel = adversary.family_matrix_game(k)
        closed_form = Fraction(k * k, 2 * k - 1)
        vb = adversary.variant_bound_exhaustive(fam, rel)
        if vb.min_ratio != closed_form:
            return _fail("adversary", "matrix_game",
                         f"k={k}: min M/q {vb.min_ratio} != {closed_form}")
        for _ in range(samples):
            mask = rng.getrandbits(fam.size)
            z = [i for i in range(fam.size) if (mask >> i) & 1]
            m = adversary.big_m(fam, rel, z)
            if m != len(z) * k:
                return _fail("adversary", "matrix_game",
                             f"k={k} Z={z}: M={m} != |Z|*k")
            if adversary.big_q(fam, rel, z) > m:
                return _fail("adversary", "matrix_game",
                             f"k={k} Z={z}: q > M")
        ab = adversary.aaronson_vmin(fam, rel)
        if ab.v_min != 1 or ab.bound != Fraction(1, 5):
            return _fail("adversary", "matrix_game",
                         f"k={k}: aaronson {ab} != (1, 1/5)")
    return _ok("adversary", "matrix_game")


def check_proposition_stronger(samples=0, seed=0):
    """min M(Z)/q(Z) >= 1/(2 v_min) on the matrix game and the small
    staircase family."""
    cases = []
    for k in (2, 3, 4):
        fam, rel = adversary.family_matrix_game(k)
        cases.append((f"matrix k={k}", fam, rel))
    g = graphs.clique_graph(4)
    ps = pathsystems.shortest_path_system(g)
    fam, rel, _ = adversary.family_staircase(g, ps, 1)
    cases.append(("staircase n=4 L=1", fam, rel))
    for name, fam, rel in cases:
        vb = adversary.variant_bound_exhaustive(fam, rel)
        ab = adversary.aaronson_vmin(fam, rel)
        if vb.min_ratio < 1 / (2 * ab.v_min):
            return _fail("adversary", "proposition_stronger",
                         f"{name}: {vb.min_ratio} < 1/(2*{ab.v_min})")
    return _ok("adversary", "proposition_stronger")


def check_diagonal_solver(samples=0, seed=0):
    for k in range(2, 17):
        fam, _ = adversary.family_matrix_game(k)
        cell_index = {cell: idx for idx, cell in enumerate(fam.domain)}
        for fi in range(fam.size):
            oracle = lambda cell: fam.functions[fi][cell_index[cell]]
            label, queries = adversary.matrix_game_diagonal_solver(oracle, k)
            if label != fam.labels[fi] or queries > k:
                return _fail("adversary", "diagonal_solver",
                             f"k={k} F{fi}: label {label}, {queries} queries")
    return _ok("adversary", "diagonal_solver")


def check_staircase_family(samples=0, seed=0):
    g = graphs.clique_graph(4)
    ps = pathsystems.shortest_path_system(g)
    fam, rel, insts = adversary.family_staircase(g, ps, 1)
    if fam.size != 8:
        return _fail("adversary", "staircase_family", f"size {fam.size} != 8")
    for i, inst in enumerate(insts):
        if staircase.is_good(inst.milestones):
            m = adversary.big_m(fam, rel, [i])
            if m != 24:
                return _fail("adversary", "staircase_family",
                             f"good F{i}: M={m} != 24")
    vb = adversary.variant_bound_exhaustive(fam, rel)
    if vb.bound <= 0:
        return _fail("adversary", "staircase_family", "bound not positive")
    return _ok("adversary", "staircase_family")


# ---------------------------------------------------------------------------
# solvers scope
# ---------------------------------------------------------------------------


def check_solver_correctness(samples=100, seed=0):
    from .solvers import QueryOracle, brute_force_min, solve_decision, \
        steepest_descent, warm_start_descent

    rng = random.Random(seed)
    cases = [("K6", graphs.clique_graph(6), None),
             ("grid3", graphs.grid_graph(3), None),
             ("hypercube4", graphs.hypercube_graph(4), "hypercube")]
    for name, g, strat in cases:
        ps = (pathsystems.hypercube_path_system(g) if strat == "hypercube"
              else pathsystems.shortest_path_system(g))
        delta = graphs.graph_metrics(g)["max_degree"]
        for _ in range(max(1, samples // 3)):
            L = rng.randrange(1, min(4, g.n))
            inst = staircase.sample_hard_instance(g, ps, L, rng.getrandbits(64))
            truth = brute_force_min(g, inst.oracle)
            if truth != {inst.minimum}:
                return _fail("solvers", "correctness",
                             f"{name}: brute force minima {truth}")

            oracle = QueryOracle(inst.oracle)
            res = steepest_descent(g, oracle, 1)
            if res.answer != inst.minimum or res.queries > g.n:
                return _fail("solvers", "correctness",
                             f"{name} descent: {res.answer} q={res.queries}")
            moves = res.trace
            vals = [inst.values[v] for v in moves]
            if any(a <= b for a, b in zip(vals, vals[1:])):
                return _fail("solvers", "correctness",
                             f"{name}: descent values not decreasing")
            if res.queries > 1 + len(moves) * delta:
                return _fail("solvers", "correctness",
                             f"{name}: query accounting broken")

            oracle2 = QueryOracle(inst.oracle)
            res2 = warm_start_descent(g, oracle2, t="auto",
                                      seed=rng.getrandbits(64))
            if res2.answer != inst.minimum or res2.queries > g.n:
                return _fail("solvers", "correctness",
                             f"{name} warm-start: {res2.answer}")

            oracle3 = QueryOracle(inst.oracle)
            dec = solve_decision(g, oracle3,
                                 lambda gg, oo: steepest_descent(gg, oo, 1))
            if dec.answer != inst.bit:
                return _fail("solvers", "correctness",
                             f"{name} decision: bit {dec.answer} != {inst.bit}")
    return _ok("solvers", "correctness")


def check_solver_determinism(samples=20, seed=0):
    from .solvers import QueryOracle, warm_start_descent

    g = graphs.hypercube_graph(4)
    ps = pathsystems.hypercube_path_system(g)
    rng = random.Random(seed)
    for _ in range(samples):
        inst_seed = rng.getrandbits(64)
        s_seed = rng.getrandbits(64)
        inst = staircase.sample_hard_instance(g, ps, 3, inst_seed)
        o1, o2 = QueryOracle(inst.oracle), QueryOracle(inst.oracle)
        r1 = warm_start_descent(g, o1, t=5, seed=s_seed)
        r2 = warm_start_descent(g, o2, t=5, seed=s_seed)
        if o1.transcript != o2.transcript or r1 != r2:
            return _fail("solvers", "determinism", f"seed {s_seed} diverged")
    return _ok("solvers", "determinism")


# ---------------------------------------------------------------------------
# bench scope
# ---------------------------------------------------------------------------


def check_bench_determinism(samples=0, seed=0):
    g = graphs.hypercube_graph(4)
    solvers = (bench.SolverSpec("descent"), bench.SolverSpec("warm-start"))
    reports = []
    for workers in (1, 1, 4):
        cfg = bench.BenchConfig("hypercube", g, "hypercube", 3, solvers,
                                trials=20, master_seed=1234, workers=workers)
        reports.append(bench.report_to_csv(bench.run_bench(cfg)))
    if reports[0] != reports[1]:
        return _fail("bench", "determinism", "re-run differs")
    if reports[0] != reports[2]:
        return _fail("bench", "determinism", "worker count changes output")
    if not all(row.endswith(",true") for row in reports[0].splitlines()[1:]):
        return _fail("bench", "determinism", "incorrect solver row present")
    return _ok("bench", "determinism")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

SUITES = {
    "graph": [check_graph_determinism, check_bfs_metric_properties,
              check_expansion_invariance, check_separation_invariance],
    "paths": [check_congestion_range, check_oracle_lower_bounds,
              check_cayley_uniform, check_hypercube_congestion,
              check_pathsystem_roundtrip, check_psi_identity],
    "staircase": [check_unique_local_minimum, check_rv_twice_rtilde,
                  check_m_large, check_count_denominator,
                  check_tail_count_bound, check_qz_bound,
                  check_sampler_marginals],
    "separation": [check_grid_arrangements, check_separation_validity,
                   check_separation_m_large, check_separation_count,
                   check_parameter_bound],
    "adversary": [check_matrix_game_laws, check_proposition_stronger,
                  check_diagonal_solver, check_staircase_family],
    "solvers": [check_solver_correctness, check_solver_determinism],
    "bench": [check_bench_determinism],
}


def run_verify(scope: str = "all", budget: int | None = None, seed: int = 0):
    """Run a scope's checks (or all); returns the list of CheckResults."""
    if scope == "all":
        scopes = list(SUITES)
    elif scope in SUITES:
        scopes = [scope]
    else:
        raise ValueError(f"unknown scope {scope!r}; choose from "
                         f"{['all', *SUITES]}")
    results = []
    for sc in scopes:
        for fn in SUITES[sc]:
            if budget is None:
                results.append(fn(seed=seed))
            else:
                results.append(fn(samples=budget, seed=seed))
    return results
