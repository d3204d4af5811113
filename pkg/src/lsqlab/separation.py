"""Path arrangements, cluster staircases, and the separation-flavoured
value and relation functions.

A path arrangement with parameter m consists of m disjoint connected
clusters plus, for every ordered cluster pair (i, j), m inter-cluster
paths that collectively visit each outside vertex at most once.  Cluster
sequences x = (x_1 = 1, x_2, ..., x_{2c+1}) read clusters at odd positions
and inter-cluster path indices at even positions; the induced walk stitches
the chosen inter-cluster paths together with shortest paths inside each
visited cluster.

The staircase definition references an inter-cluster family once under the
name Q; it is read here as P, the only path family an arrangement carries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph, bfs_distances
from .staircase import (
    Staircase,
    HiddenBitInstance,
    hide_bit,
    is_good,
    shared_prefix_length,
)


@dataclass(frozen=True)
class PathArrangement:
    """Clusters N_1..N_m with inter-cluster paths P_k(i, j) on a graph.

    inter_paths maps (k, i, j) to a vertex tuple for every k, i, j in [m];
    v_start is the distinguished walk entrance inside N_1.
    """

    graph: Graph
    m: int
    clusters: tuple
    inter_paths: dict = field(repr=False)
    v_start: int

    def cluster_of(self, v: int) -> int | None:
        for i, cluster in enumerate(self.clusters, start=1):
            if v in cluster:
                return i
        return None

    def path(self, k: int, i: int, j: int) -> tuple:
        return self.inter_paths[(k, i, j)]


def grid_path_arrangement(side: int) -> PathArrangement:
    """Columns of a side x side grid as clusters, rows as inter-cluster paths.

    P_k(i, j) runs along row k from column i to column j; P_k(i, i) is the
    single k-th vertex of column i.  v_start is vertex 1.
    """
    if side < 2:
        raise ValueError("grid side must be >= 2")
    from .graphs import grid_graph

    g = grid_graph(side)

    def cell(row, col):  # 1-based row/col -> row-major vertex id
        return (row - 1) * side + col

    clusters = tuple(
        frozenset(cell(r, c) for r in range(1, side + 1))
        for c in range(1, side + 1)
    )
    inter = {}
    for k in range(1, side + 1):
        for i in range(1, side + 1):
            for j in range(1, side + 1):
                if i == j:
                    inter[(k, i, j)] = (cell(k, i),)
                else:
                    step = 1 if j > i else -1
                    inter[(k, i, j)] = tuple(
                        cell(k, c) for c in range(i, j + step, step)
                    )
    return PathArrangement(g, side, clusters, inter, v_start=1)


def arrangement_violations(pa: PathArrangement, g: Graph) -> list:
    """All reasons the arrangement fails its definition (empty if valid)."""
    problems = []
    seen = set()
    for idx, cluster in enumerate(pa.clusters, start=1):
        if not cluster:
            problems.append(f"cluster {idx} is empty")
            continue
        if seen & set(cluster):
            problems.append(f"cluster {idx} overlaps an earlier cluster")
        seen |= set(cluster)
        if not _induced_connected(g, cluster):
            problems.append(f"cluster {idx} is not connected")
    if len(pa.clusters) != pa.m:
        problems.append(f"expected {pa.m} clusters, found {len(pa.clusters)}")
    if pa.cluster_of(pa.v_start) != 1:
        problems.append("v_start is not in cluster 1")

    m = pa.m
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            outside_visits = {}
            for k in range(1, m + 1):
                p = pa.inter_paths.get((k, i, j))
                if p is None:
                    problems.append(f"missing path P_{k}({i},{j})")
                    continue
                tag = f"P_{k}({i},{j})"
                if len(set(p)) != len(p):
                    problems.append(f"{tag} repeats a vertex")
                for a, b in zip(p, p[1:]):
                    if not g.has_edge(a, b):
                        problems.append(f"{tag} uses non-edge ({a},{b})")
                if p[0] not in pa.clusters[i - 1]:
                    problems.append(f"{tag} does not start in cluster {i}")
                if p[-1] not in pa.clusters[j - 1]:
                    problems.append(f"{tag} does not end in cluster {j}")
                inside = pa.clusters[i - 1] | pa.clusters[j - 1]
                for v in p[1:-1]:
                    if v in inside:
                        problems.append(f"{tag} interior vertex {v} inside a cluster")
                for v in p:
                    if v not in inside:
                        outside_visits[v] = outside_visits.get(v, 0) + 1
            for v, c in outside_visits.items():
                if c > 1:
                    problems.append(
                        f"vertex {v} visited {c} times collectively by paths for ({i},{j})"
                    )
    return problems


def verify_arrangement(pa: PathArrangement, g: Graph) -> bool:
    """True iff disjointness, connectivity, endpoints, and the collective
    once-visitation condition all hold."""
    return not arrangement_violations(pa, g)


def _induced_connected(g: Graph, cluster) -> bool:
    cluster = set(cluster)
    start = next(iter(cluster))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in cluster and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == cluster


def intra_cluster_path(pa: PathArrangement, i: int, u: int, v: int) -> tuple:
    """Shortest path from u to v inside cluster i (lowest-id tie-break)."""
    cluster = pa.clusters[i - 1]
    if u not in cluster or v not in cluster:
        raise ValueError(f"endpoints {u},{v} not inside cluster {i}")
    if u == v:
        return (u,)
    g = pa.graph
    from collections import deque

    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for w in g.neighbors(a):
            if w in cluster and w not in dist:
                dist[w] = dist[a] + 1
                queue.append(w)
    if v not in dist:
        raise ValueError(f"cluster {i} does not connect {u} and {v}")
    path = [v]
    while path[-1] != u:
        cur = path[-1]
        for w in g.neighbors(cur):  # ascending: first hit is the minimum
            if w in cluster and dist.get(w, -1) == dist[cur] - 1:
                path.append(w)
                break
    path.reverse()
    return tuple(path)


def check_cluster_sequence(x, m: int) -> int:
    """Validate shape (odd length, entries in [m], x_1 = 1); return c."""
    if len(x) % 2 != 1:
        raise ValueError("cluster sequence must have odd length 2c + 1")
    if x[0] != 1:
        raise ValueError("cluster sequence must start at cluster 1")
    for e in x:
        if not (1 <= e <= m):
            raise ValueError(f"entry {e} outside 1..{m}")
    return (len(x) - 1) // 2


def cluster_staircase(x, pa: PathArrangement) -> Staircase:
    """Walk induced by a cluster sequence.

    Odd segments are intra-cluster shortest paths, even segments the chosen
    inter-cluster paths; segment i > 1 odd runs from the end of the previous
    inter-cluster path to the start of the next one.  c = 0 degenerates to
    the single-vertex walk (v_start,).
    """
    c = check_cluster_sequence(x, pa.m)
    if c == 0:
        return Staircase((pa.v_start,), ())
    segments = []
    for i in range(1, 2 * c + 1):
        if i == 1:
            nxt = pa.path(x[1], 1, x[2])
            segments.append(intra_cluster_path(pa, 1, pa.v_start, nxt[0]))
        elif i % 2 == 0:
            segments.append(pa.path(x[i - 1], x[i - 2], x[i]))
        else:
            # odd i > 1: inside cluster x_i, from the end of the previous
            # inter-cluster path to the start of the next one
            prev = pa.path(x[i - 2], x[i - 3], x[i - 1])
            nxt = pa.path(x[i], x[i - 1], x[i + 1])
            segments.append(intra_cluster_path(pa, x[i - 1], prev[-1], nxt[0]))
    walk = list(segments[0])
    starts = [0]
    for seg in segments[1:]:
        if seg[0] != walk[-1]:
            raise ValueError("cluster staircase segments do not chain")
        starts.append(len(walk) - 1)
        walk.extend(seg[1:])
    return Staircase(tuple(walk), tuple(starts))


def separation_tail(j: int, s: Staircase) -> tuple:
    """Walk suffix from odd segment j minus the first occurrence of its
    first vertex; empty for j = 2c + 1."""
    segments = len(s.segment_starts)
    if j % 2 != 1:
        raise ValueError("separation tails are defined for odd indices only")
    if not (1 <= j <= segments + 1):
        raise ValueError(f"tail index {j} outside 1..{segments + 1}")
    if j == segments + 1:
        return ()
    return s.walk[s.segment_starts[j - 1] + 1:]


def separation_value_function(x, pa: PathArrangement, g: Graph) -> dict:
    """Off the walk: dist(v, v_start); on the walk: -(last position of v)."""
    s = cluster_staircase(x, pa)
    dist = bfs_distances(g, pa.v_start)
    values = {v: dist[v] for v in g.vertices()}
    for pos, v in enumerate(s.walk, start=1):
        values[v] = -pos
    return values


def make_separation_instance(x, bit: int, pa: PathArrangement,
                             g: Graph) -> HiddenBitInstance:
    s = cluster_staircase(x, pa)
    values = separation_value_function(x, pa, g)
    return hide_bit(values, s, bit, x=x)


# ---------------------------------------------------------------------------
# Separation relation and counting
# ---------------------------------------------------------------------------


def max_odd_shared_prefix(x, y) -> int:
    """Largest odd j with x_{1..j} = y_{1..j} (both start at 1, so >= 1)."""
    j = shared_prefix_length(x, y)
    if j % 2 == 0:
        j -= 1
    return j


def relation_separation(x, b1: int, y, b2: int, m: int) -> int:
    """Separation relation: 0 for equal bits or a bad sequence, else m^j
    for the largest odd shared-prefix index j."""
    if len(x) != len(y):
        raise ValueError("cluster sequences must share their length")
    if x[0] != 1 or y[0] != 1:
        raise ValueError("cluster sequences must start at 1")
    if b1 == b2 or not is_good(x) or not is_good(y):
        return 0
    return m ** max_odd_shared_prefix(x, y)


def count_good_with_prefix_separation(x, j: int, m: int) -> int:
    """Count of good sequences whose longest shared prefix with the good
    sequence x is exactly j: (m-j-1) * prod_{i=j+2}^{2c+1}(m-i+1).

    The count classifies by the longest shared prefix over all positions;
    restricting to odd positions only would additionally need the
    even-extension case and does not match this product.
    """
    length = len(x)  # 2c + 1
    if not is_good(x):
        raise ValueError("reference sequence must be good")
    if not (1 <= j <= length - 1):
        raise ValueError(f"prefix length {j} outside 1..{length - 1}")
    count = m - j - 1
    for i in range(j + 2, length + 1):
        count *= m - i + 1
    return count


def arrangement_parameter_bound(s: int, delta: int) -> int:
    """Guaranteed path-arrangement parameter max(floor(sqrt(s/2*delta)), 1)."""
    if delta < 1:
        raise ValueError("maximum degree must be >= 1")
    if s < 0:
        raise ValueError("separation number must be >= 0")
    return max(math.isqrt(s // (2 * delta)), 1)


def sample_cluster_sequence(m: int, c: int, rng) -> tuple:
    """Cluster 1 followed by 2c distinct entries drawn uniformly from 2..m.

    Without-replacement sampling makes every good sequence equally likely,
    mirroring the milestone sampler on the congestion side.
    """
    if 2 * c + 1 > m:
        raise ValueError(f"need 2c + 1 <= m, got c={c}, m={m}")
    return (1, *rng.sample(range(2, m + 1), 2 * c))


def sample_separation_instance(pa: PathArrangement, c: int,
                               seed) -> HiddenBitInstance:
    """Seed-deterministic draw of (cluster sequence, bit) plus the instance."""
    import random

    rng = random.Random(seed)
    x = sample_cluster_sequence(pa.m, c, rng)
    bit = rng.randrange(2)
    return make_separation_instance(x, bit, pa, pa.graph)
