"""Path systems: construction, congestion counts, the psi map, and the
brute-force congestion oracle."""

import pytest

import lsqlab as L
from lsqlab import CapabilityError
from lsqlab.pathsystems import PathSystem, bit_fixing_path
from lsqlab.serialize import path_system_from_dict, path_system_to_dict


def path3():
    return L.from_edges(3, [(1, 2), (2, 3)])


def test_shortest_system_k4():
    g = L.clique_graph(4)
    ps = L.shortest_path_system(g)
    for u in g.vertices():
        for v in g.vertices():
            if u != v:
                assert ps.path(u, v) == (u, v)
    prof = L.congestion(ps)
    assert prof.max_vertex == 7  # trivial path + 2(n-1) endpoint memberships
    assert prof.max_edge == 2


def test_shortest_system_path3_middle_vertex():
    ps = L.shortest_path_system(path3())
    assert ps.path(1, 3) == (1, 2, 3)
    prof = L.congestion(ps)
    assert prof.per_vertex[2] == 7


def test_trivial_paths_are_singletons():
    ps = L.shortest_path_system(L.ring_graph(5))
    for u in range(1, 6):
        assert ps.path(u, u) == (u,)
    assert all(len(p) <= 3 for _, p in ps.iter_items())


def test_hypercube_congestion_formula():
    for b in (1, 2, 3, 4):
        g = L.hypercube_graph(b)
        got = L.congestion(L.hypercube_path_system(g)).max_vertex
        assert 2 * got == g.n * (2 + b)


def test_bit_fixing_msb_first():
    # 00 -> 11 toggles the high bit first: 00, 10, 11
    assert bit_fixing_path(1, 4, 2) == (1, 3, 4)


def test_hypercube_system_rejects_other_graphs():
    with pytest.raises(ValueError):
        L.hypercube_path_system(L.ring_graph(6))


def test_cayley_system_examples():
    t5 = L.cyclic_group(5)
    g5 = L.cayley_graph(t5, {2, 5})
    prof = L.congestion(L.cayley_path_system(g5, t5))
    assert set(prof.per_vertex.values()) == {11}
    assert prof.max_vertex <= (L.graph_metrics(g5)["diameter"] + 1) * 5

    t2 = L.cyclic_group(2)
    g2 = L.cayley_graph(t2, {2})
    assert L.congestion(L.cayley_path_system(g2, t2)).max_vertex == 3

    t4 = L.cyclic_group(4)
    g4 = L.cayley_graph(t4, {2, 4})
    per = L.congestion(L.cayley_path_system(g4, t4)).per_vertex
    assert len(set(per.values())) == 1


def test_cayley_system_rejects_mismatch():
    t5 = L.cyclic_group(5)
    with pytest.raises(ValueError):
        L.cayley_path_system(L.ring_graph(4), t5)  # order mismatch
    star5 = L.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    with pytest.raises(ValueError):
        L.cayley_path_system(star5, t5)  # not the Cayley edge set


def _symmetric_group_3():
    """Multiplication table of S3 (permutations of 3 symbols, identity first)."""
    import itertools

    perms = [(0, 1, 2)] + sorted(p for p in itertools.permutations(range(3))
                                 if p != (0, 1, 2))

    def compose(p, q):  # apply q, then p
        return tuple(p[q[i]] for i in range(3))

    index = {p: i + 1 for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[compose(a, b)] for b in perms) for a in perms
    )
    return table, index


def test_cayley_system_nonabelian():
    # left translation of identity-rooted shortest paths stays valid and
    # uniform on a non-abelian group (S3 with two transpositions)
    table, index = _symmetric_group_3()
    gens = {index[(1, 0, 2)], index[(0, 2, 1)]}
    g = L.cayley_graph(table, gens)
    assert g.n == 6
    ps = L.cayley_path_system(g, table)
    for (u, v), p in ps.iter_items():
        assert p[0] == u and p[-1] == v
        for a, b in zip(p, p[1:]):
            assert g.has_edge(a, b)
    prof = L.congestion(ps)
    assert len(set(prof.per_vertex.values())) == 1
    diam = L.graph_metrics(g)["diameter"]
    assert prof.max_vertex <= (diam + 1) * g.n


def test_oracle_matches_full_brute_force_on_c4():
    import itertools

    g = L.ring_graph(4)
    from lsqlab.pathsystems import _all_simple_paths

    ordered = [(u, v) for u in g.vertices() for v in g.vertices() if u != v]
    options = [_all_simple_paths(g, u, v, 50) for u, v in ordered]
    best = None
    for combo in itertools.product(*options):
        counts = {v: 2 * g.n - 1 for v in g.vertices()}
        for p in combo:
            for w in p[1:-1]:
                counts[w] += 1
        best = min(best or 10 ** 9, max(counts.values()))
    assert L.min_congestion_oracle(g)[0] == best


def test_star_center_congestion():
    star = L.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    prof = L.congestion(L.shortest_path_system(star))
    assert prof.per_vertex[1] == 13


def test_psi_examples():
    ps = L.shortest_path_system(path3())
    psi2 = L.num_paths_through(ps, 2)
    assert psi2 == {1: 2, 2: 3, 3: 2}

    k4 = L.shortest_path_system(L.clique_graph(4))
    psi1 = L.num_paths_through(k4, 1)
    assert psi1[1] == 4
    assert all(psi1[u] == 1 for u in (2, 3, 4))


def test_psi_sums_to_vertex_congestion():
    for g in (path3(), L.clique_graph(4), L.grid_graph(2)):
        ps = L.shortest_path_system(g)
        prof = L.congestion(ps)
        for v in g.vertices():
            assert sum(L.num_paths_through(ps, v).values()) == prof.per_vertex[v]


def test_congestion_range_small_graphs():
    for g in (L.clique_graph(5), L.ring_graph(7), L.grid_graph(2),
              L.hypercube_graph(3)):
        prof = L.congestion(L.shortest_path_system(g))
        assert g.n <= prof.max_vertex <= g.n * g.n


def test_oracle_path3_unique_system():
    g_star, ps = L.min_congestion_oracle(path3())
    assert g_star == 7
    assert ps.path(1, 3) == (1, 2, 3)


def test_oracle_k4_direct_edges_optimal():
    g = L.clique_graph(4)
    g_star, _ = L.min_congestion_oracle(g)
    assert g_star == 7
    assert L.congestion(L.shortest_path_system(g)).max_vertex == g_star


def test_oracle_c4_beats_or_ties_lexicographic():
    g = L.ring_graph(4)
    g_star, ps = L.min_congestion_oracle(g)
    lex = L.congestion(L.shortest_path_system(g)).max_vertex
    assert g_star <= lex
    assert L.congestion(ps).max_vertex == g_star


def test_oracle_cap():
    with pytest.raises(CapabilityError):
        L.min_congestion_oracle(L.ring_graph(8))


def test_pathsystem_validation():
    with pytest.raises(ValueError):
        PathSystem(2, {(1, 1): (1,), (1, 2): (1, 2), (2, 1): (2, 1)})
    with pytest.raises(ValueError):
        PathSystem(2, {(1, 1): (1,), (1, 2): (2, 1), (2, 1): (2, 1),
                       (2, 2): (2,)})


def test_serialization_roundtrip():
    ps = L.shortest_path_system(L.ring_graph(5))
    assert path_system_from_dict(path_system_to_dict(ps)).paths == ps.paths
