"""Path arrangements, cluster staircases, and separation-side quantities."""

import itertools

import pytest

import lsqlab as L
from lsqlab.separation import (
    arrangement_violations,
    cluster_staircase,
    count_good_with_prefix_separation,
    intra_cluster_path,
    make_separation_instance,
    separation_tail,
)
from lsqlab.staircase import shared_prefix_length


def test_nine_vertex_arrangement_verifies(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    assert L.verify_arrangement(pa, g)


def test_duplicate_interior_vertex_fails(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    bad = dict(pa.inter_paths)
    bad[(2, 1, 3)] = bad[(1, 1, 3)]  # reuse path 1's interior vertex
    broken = L.PathArrangement(g, pa.m, pa.clusters, bad, pa.v_start)
    problems = arrangement_violations(broken, g)
    assert problems and not L.verify_arrangement(broken, g)


def test_grid_arrangements_verify():
    for side in (2, 3, 4):
        pa = L.grid_path_arrangement(side)
        assert pa.m == side
        assert L.verify_arrangement(pa, pa.graph)
    pa3 = L.grid_path_arrangement(3)
    assert pa3.clusters[0] == frozenset({1, 4, 7})


def test_cluster_staircase_nine_vertex_walk(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    s = cluster_staircase((1, 3, 3, 1, 2), pa)
    assert s.walk == (1, 2, 3, 6, 9, 8, 7, 1, 4)


def test_cluster_staircase_degenerate(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    assert cluster_staircase((1,), pa).walk == (1,)


def test_cluster_staircase_grid_edge_consecutive():
    pa = L.grid_path_arrangement(3)
    for rest in itertools.product(range(1, 4), repeat=4):
        x = (1, *rest)
        s = cluster_staircase(x, pa)
        assert s.walk[0] == pa.v_start
        for a, b in zip(s.walk, s.walk[1:]):
            assert pa.graph.has_edge(a, b)


def test_separation_values_nine_vertex(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    x = (1, 3, 3, 1, 2)
    vals = L.separation_value_function(x, pa, g)
    assert vals[1] == -8   # first walk vertex, revisited at position 8
    assert vals[4] == -9   # walk end
    assert vals[5] == 2    # off-walk distance
    assert L.local_minima(g, vals) == {4}


def test_separation_validity_exhaustive_side3():
    pa = L.grid_path_arrangement(3)
    g = pa.graph
    for rest in itertools.product(range(1, 4), repeat=2):
        x = (1, *rest)
        inst = make_separation_instance(x, 0, pa, g)
        assert L.validate_function(inst.values, inst.staircase.walk, g)
        assert L.local_minima(g, inst.values) == {inst.minimum}


def test_separation_walk_single_vertex_values():
    pa = L.grid_path_arrangement(3)
    g = pa.graph
    vals = L.separation_value_function((1,), pa, g)
    assert vals[pa.v_start] == -1
    assert all(v == pa.v_start or vals[v] > 0 for v in g.vertices())


def test_separation_tail(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    s = cluster_staircase((1, 3, 3, 1, 2), pa)
    assert separation_tail(5, s) == ()
    assert separation_tail(3, s) == s.walk[s.segment_starts[2] + 1:]
    with pytest.raises(ValueError):
        separation_tail(2, s)


def test_intra_cluster_path_stays_inside(nine_vertex_arrangement):
    g, pa = nine_vertex_arrangement
    p = intra_cluster_path(pa, 1, 1, 3)
    assert p == (1, 2, 3)
    with pytest.raises(ValueError):
        intra_cluster_path(pa, 1, 1, 5)


def test_relation_separation_examples():
    m, c = 4, 1
    assert L.relation_separation((1, 2, 3), 0, (1, 2, 3), 1, m) == m ** 3
    assert L.relation_separation((1, 2, 3), 0, (1, 2, 3), 0, m) == 0
    assert L.relation_separation((1, 2, 3), 0, (1, 4, 3), 1, m) == 4
    # bad sequence zeroes the relation
    assert L.relation_separation((1, 2, 2), 0, (1, 2, 3), 1, m) == 0
    with pytest.raises(ValueError):
        L.relation_separation((1, 2, 3), 0, (1, 2, 3, 4, 5), 1, m)


def test_relation_separation_even_agreement_rounds_down():
    # prefixes agree through index 2 only; the exponent must stay odd
    m = 5
    assert L.relation_separation((1, 2, 3), 0, (1, 2, 4), 1, m) == 5


def test_count_formula_exhaustive_small():
    for m, c in ((4, 1), (5, 1), (5, 2), (6, 2)):
        if 2 * c + 1 > m:
            continue
        x = tuple(range(1, 2 * c + 2))
        for j in range(1, 2 * c + 1):
            actual = sum(
                1
                for rest in itertools.product(range(1, m + 1), repeat=2 * c)
                if L.is_good((1, *rest))
                and shared_prefix_length(x, (1, *rest)) == j
            )
            assert actual == count_good_with_prefix_separation(x, j, m)


def test_arrangement_serialization_roundtrip(nine_vertex_arrangement):
    from lsqlab.serialize import arrangement_from_dict, arrangement_to_dict

    g, pa = nine_vertex_arrangement
    back = arrangement_from_dict(arrangement_to_dict(pa), g)
    assert back.m == pa.m and back.v_start == pa.v_start
    assert back.clusters == pa.clusters
    assert back.inter_paths == pa.inter_paths
    assert L.verify_arrangement(back, g)


def test_sample_separation_instance():
    pa = L.grid_path_arrangement(4)
    a = L.sample_separation_instance(pa, 1, seed=9)
    b = L.sample_separation_instance(pa, 1, seed=9)
    assert a.milestones == b.milestones and a.bit == b.bit
    assert a.milestones[0] == 1 and len(set(a.milestones)) == 3
    assert L.local_minima(pa.graph, a.values) == {a.minimum}
    with pytest.raises(ValueError):
        L.sample_separation_instance(pa, 2, seed=0)  # needs 2c+1 <= m


def test_parameter_bound_examples():
    assert L.arrangement_parameter_bound(162, 1) == 9
    assert L.arrangement_parameter_bound(0, 5) == 1
    assert L.arrangement_parameter_bound(8, 1) == 2
    with pytest.raises(ValueError):
        L.arrangement_parameter_bound(8, 0)
