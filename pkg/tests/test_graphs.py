"""Graph families, metrics, and the exact expansion/separation routines."""

import json
import random
from fractions import Fraction

import pytest

import lsqlab as L
from lsqlab import CapabilityError
from lsqlab.graphs import GraphSpec, relabel, validate_group_table
from lsqlab.serialize import graph_to_dict


def test_hypercube_dim2_is_4cycle():
    g = L.hypercube_graph(2)
    assert g.n == 4
    assert all(g.degree(v) == 2 for v in g.vertices())


def test_barbell8_edge_count_and_shape():
    g = L.barbell_graph(8)
    assert len(g.edges) == 13
    assert g.has_edge(4, 5)
    m = L.graph_metrics(g)
    assert m["max_degree"] == 4
    assert m["diameter"] == 3


def test_grid4_distance_corner():
    g = L.grid_graph(4)
    assert L.bfs_distances(g, 1)[4] == 3


def test_bfs_examples():
    assert L.bfs_distances(L.clique_graph(4), 1)[1:] == [0, 1, 1, 1]
    assert L.bfs_distances(L.ring_graph(5), 1)[1:] == [0, 1, 2, 2, 1]
    assert L.bfs_distances(L.grid_graph(4), 1)[7] == 3


def test_metrics_examples():
    assert L.graph_metrics(L.clique_graph(4)) == {"max_degree": 3, "diameter": 1}
    assert L.graph_metrics(L.hypercube_graph(3)) == {"max_degree": 3, "diameter": 3}


def test_expansion_examples():
    assert L.edge_expansion_exact(L.clique_graph(4)) == 2
    assert L.edge_expansion_exact(L.ring_graph(6)) == Fraction(2, 3)
    k2 = L.from_edges(2, [(1, 2)])
    assert L.edge_expansion_exact(k2) == 1


def test_expansion_cap():
    g = L.ring_graph(25)
    with pytest.raises(CapabilityError):
        L.edge_expansion_exact(g)
    # explicit cap raise works
    assert L.edge_expansion_exact(L.ring_graph(12), cap=12) > 0


def test_separation_examples():
    assert L.separation_number_exact(L.clique_graph(4)) == 1
    assert L.separation_number_exact(L.barbell_graph(8)) == 1
    assert L.separation_number_barbell_exact(8) == 1
    assert L.separation_number_barbell_exact(16) == 2


def test_separation_cap():
    with pytest.raises(CapabilityError):
        L.separation_number_exact(L.barbell_graph(16))


def test_separation_relabeling_invariance():
    rng = random.Random(3)
    g = L.barbell_graph(8)
    s = L.separation_number_exact(g)
    for _ in range(5):
        perm = list(g.vertices())
        rng.shuffle(perm)
        g2 = relabel(g, {v: perm[v - 1] for v in g.vertices()})
        assert L.separation_number_exact(g2) == s


def test_build_graph_determinism_and_serialization():
    spec = GraphSpec("random_regular", {"n": 12, "d": 3, "seed": 99})
    g1, g2 = L.build_graph(spec), L.build_graph(spec)
    assert json.dumps(graph_to_dict(g1)) == json.dumps(graph_to_dict(g2))
    assert all(g1.degree(v) == 3 for v in g1.vertices())


def test_random_regular_parity_error():
    with pytest.raises(ValueError):
        L.random_regular_graph(5, 3, seed=0)


def test_disconnected_family_errors():
    with pytest.raises(ValueError):
        L.ring_graph(2)
    with pytest.raises(ValueError):
        L.from_edges(4, [(1, 2), (3, 4)])


def test_group_table_validation():
    t = L.cyclic_group(5)
    assert validate_group_table(t) == 5
    bad = tuple(tuple(2 for _ in range(3)) for _ in range(3))
    with pytest.raises(ValueError):
        validate_group_table(bad)
    # generators not closed under inverse
    with pytest.raises(ValueError):
        L.cayley_graph(L.cyclic_group(5), {2})


def test_cayley_ring():
    g = L.cayley_graph(L.cyclic_group(5), {2, 5})
    assert all(g.degree(v) == 2 for v in g.vertices())
    assert g.n == 5


def _naive_expansion(g):
    from itertools import combinations

    best = None
    verts = list(g.vertices())
    for size in range(1, g.n // 2 + 1):
        for s in combinations(verts, size):
            s_set = set(s)
            cut = sum(1 for u, v in g.edges if (u in s_set) != (v in s_set))
            ratio = Fraction(cut, size)
            if best is None or ratio < best:
                best = ratio
    return best


def _naive_separation(g):
    from itertools import combinations

    verts = list(g.vertices())
    best = 0
    for h_size in range(2, g.n + 1):
        for h in combinations(verts, h_size):
            h_set = set(h)
            inner = None
            for a_size in range(1, h_size + 1):
                if 4 * a_size < h_size or 4 * a_size > 3 * h_size:
                    continue
                for a in combinations(h, a_size):
                    a_set = set(a)
                    delta = {
                        v for v in h_set - a_set
                        if any(g.has_edge(v, u) for u in a_set)
                    }
                    if inner is None or len(delta) < inner:
                        inner = len(delta)
            if inner is not None and inner > best:
                best = inner
    return best


def test_expansion_matches_naive_enumeration():
    rng = random.Random(5)
    graphs_under_test = [L.grid_graph(2), L.barbell_graph(6),
                         L.random_regular_graph(8, 3, seed=1)]
    for g in graphs_under_test:
        assert L.edge_expansion_exact(g) == _naive_expansion(g)
    del rng


def test_separation_matches_naive_enumeration():
    for g in (L.clique_graph(4), L.ring_graph(5), L.grid_graph(2),
              L.barbell_graph(6), L.random_regular_graph(6, 3, seed=2)):
        assert L.separation_number_exact(g) == _naive_separation(g)


def test_barbell_symmetric_matches_generic():
    for n in (4, 6, 8):
        assert (L.separation_number_barbell_exact(n)
                == L.separation_number_exact(L.barbell_graph(n)))


def test_bfs_edge_lipschitz():
    for g in (L.grid_graph(3), L.barbell_graph(8), L.hypercube_graph(3)):
        for src in g.vertices():
            dist = L.bfs_distances(g, src)
            assert dist[src] == 0
            for u, v in g.edges:
                assert abs(dist[u] - dist[v]) <= 1
