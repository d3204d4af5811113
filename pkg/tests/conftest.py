"""Shared fixtures: the three worked examples used across the suite.

fixture 1: a 12-vertex graph with four hand-picked paths and the milestone
sequence (1, 6, 8, 6, 11), whose staircase revisits vertices 6 and 3.
fixture 2: the 4x4 grid with three hand-picked paths and milestones
(1, 6, 11, 16).
fixture 3: a 9-vertex graph of three triangles across three clusters with
a full inter-cluster path arrangement.
"""

import pytest

import lsqlab as L
from lsqlab.pathsystems import PathSystem, shortest_path_system
from lsqlab.separation import PathArrangement


def override_paths(ps: PathSystem, overrides: dict) -> PathSystem:
    paths = dict(ps.paths)
    paths.update(overrides)
    return PathSystem(ps.n, paths)


@pytest.fixture(scope="session")
def twelve_vertex_example():
    g = L.from_edges(12, [
        (1, 3), (3, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 6), (6, 10),
        (10, 3), (3, 11), (1, 2), (2, 4), (11, 12),
    ])
    ps = override_paths(shortest_path_system(g), {
        (1, 6): (1, 3, 5, 6),
        (6, 8): (6, 7, 8),
        (8, 6): (8, 9, 6),
        (6, 11): (6, 10, 3, 11),
    })
    x = (1, 6, 8, 6, 11)
    return g, ps, x


@pytest.fixture(scope="session")
def grid16_example():
    g = L.grid_graph(4)
    ps = override_paths(shortest_path_system(g), {
        (1, 6): (1, 2, 3, 7, 6),
        (6, 11): (6, 10, 11),
        (11, 16): (11, 7, 8, 12, 16),
    })
    x = (1, 6, 11, 16)
    return g, ps, x


@pytest.fixture(scope="session")
def nine_vertex_arrangement():
    # Three clusters {1,2,3}, {4,5,6}, {7,8,9}; path k uses {k, k+3, k+6}.
    g = L.from_edges(9, [
        (1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9),
        (1, 4), (4, 7), (1, 7), (2, 5), (5, 8), (2, 8), (3, 6), (6, 9), (3, 9),
    ])
    clusters = (frozenset({1, 2, 3}), frozenset({4, 5, 6}), frozenset({7, 8, 9}))
    inter = {}
    for k in (1, 2, 3):
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i == j:
                    inter[(k, i, j)] = (k + 3 * (i - 1),)
                else:
                    mid = 6 - i - j
                    inter[(k, i, j)] = (
                        k + 3 * (i - 1), k + 3 * (mid - 1), k + 3 * (j - 1))
    pa = PathArrangement(g, 3, clusters, inter, v_start=1)
    return g, pa
