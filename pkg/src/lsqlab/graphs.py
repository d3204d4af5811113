"""Graph construction and exact structural parameters.

Vertices are labelled 1..n throughout; vertex 1 is the distinguished
staircase entrance.  Every tie-break in the package resolves through the
ascending-id neighbor order fixed here.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import check_cap

EXPANSION_CAP_DEFAULT = 20
SEPARATION_CAP_DEFAULT = 14


@dataclass(frozen=True)
class Graph:
    """Connected undirected graph on vertices 1..n.

    edges is a frozenset of (u, v) pairs with u < v; adjacency lists are
    sorted ascending.  Instances are immutable and safe to share.
    """

    n: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        adj = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized u < v")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(nb)) for nb in adj)
        )
        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        if self.n == 1:
            return True
        seen = [False] * (self.n + 1)
        seen[1] = True
        stack = [1]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)


def from_edges(n: int, edges) -> Graph:
    """Build a Graph from any iterable of vertex pairs (normalizing order)."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


# ---------------------------------------------------------------------------
# Small finite groups (multiplication tables) for Cayley graph construction.
# Tables are 1-indexed nested tuples with element 1 as the identity.
# ---------------------------------------------------------------------------


def cyclic_group(k: int) -> tuple:
    """Multiplication table of Z_k; element i represents residue i - 1."""
    if k < 1:
        raise ValueError("cyclic group order must be >= 1")
    return tuple(
        tuple(((a + b) % k) + 1 for b in range(k)) for a in range(k)
    )


def direct_product_group(t1: tuple, t2: tuple) -> tuple:
    """Multiplication table of the direct product of two groups.

    Element (a, b) maps to index (a - 1) * |G2| + b.
    """
    n1, n2 = len(t1), len(t2)

    def idx(a, b):
        return (a - 1) * n2 + b

    table = []
    for a1 in range(1, n1 + 1):
        for b1 in range(1, n2 + 1):
            row = []
            for a2 in range(1, n1 + 1):
                for b2 in range(1, n2 + 1):
                    row.append(idx(t1[a1 - 1][a2 - 1], t2[b1 - 1][b2 - 1]))
            table.append(tuple(row))
    return tuple(table)


def validate_group_table(table) -> int:
    """Check a 1-indexed multiplication table is a group with identity 1.

    Returns the group order.  Raises ValueError on any violation.
    """
    n = len(table)
    if n < 1:
        raise ValueError("empty multiplication table")
    for row in table:
        if len(row) != n:
            raise ValueError("multiplication table is not square")
        for x in row:
            if not (1 <= x <= n):
                raise ValueError("table entry outside 1..n (not closed)")
    for a in range(1, n + 1):
        if table[0][a - 1] != a or table[a - 1][0] != a:
            raise ValueError("element 1 is not a two-sided identity")
    for a in range(1, n + 1):
        if 1 not in table[a - 1]:
            raise ValueError(f"element {a} has no inverse")
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = table[a - 1][b - 1]
            for c in range(1, n + 1):
                if table[ab - 1][c - 1] != table[a - 1][table[b - 1][c - 1] - 1]:
                    raise ValueError("multiplication table is not associative")
    return n


def group_inverses(table) -> tuple:
    """inv[a] with inv[0] unused; table is assumed validated."""
    n = len(table)
    inv = [0] * (n + 1)
    for a in range(1, n + 1):
        inv[a] = table[a - 1].index(1) + 1
    return tuple(inv)


def cayley_edges(table, generators) -> set:
    """Edge set {u, u*s} of the (right-multiplication) Cayley graph.

    The generating set must exclude the identity and be closed under
    inverse so that the graph is undirected.
    """
    n = len(table)
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("empty generating set")
    inv = group_inverses(table)
    for s in gens:
        if s == 1:
            raise ValueError("identity cannot be a generator")
        if inv[s] not in gens:
            raise ValueError("generating set is not closed under inverse")
    edges = set()
    for u in range(1, n + 1):
        for s in gens:
            v = table[u - 1][s - 1]
            edges.add((min(u, v), max(u, v)))
    return edges


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphSpec:
    """Recipe for one of the built-in graph families.

    kind is one of hypercube, grid, clique, ring, barbell, cayley,
    random_regular; params holds the kind-specific integers (dim, side,
    n, d, seed); cayley additionally carries a multiplication table and
    generator set.
    """

    kind: str
    params: dict = field(default_factory=dict)
    table: tuple | None = None
    generators: tuple | None = None


def hypercube_graph(dim: int) -> Graph:
    """Boolean hypercube of the given dimension; vertex v <-> bits of v-1."""
    if dim < 1:
        raise ValueError("hypercube dimension must be >= 1")
    n = 1 << dim
    edges = set()
    for x in range(n):
        for b in range(dim):
            y = x ^ (1 << b)
            if y > x:
                edges.add((x + 1, y + 1))
    return Graph(n, frozenset(edges))


def grid_graph(side: int) -> Graph:
    """side x side grid with row-major labels 1..side^2."""
    if side < 2:
        raise ValueError("grid side must be >= 2")
    edges = set()
    for r in range(side):
        for c in range(side):
            v = r * side + c + 1
            if c + 1 < side:
                edges.add((v, v + 1))
            if r + 1 < side:
                edges.add((v, v + side))
    return Graph(side * side, frozenset(edges))


def clique_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("clique needs n >= 2")
    return Graph(
        n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1))
    )


def ring_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("ring needs n >= 3")
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add((1, n))
    return Graph(n, frozenset(edges))


def barbell_graph(n: int) -> Graph:
    """Two cliques of size n/2 joined by the single edge {n/2, n/2+1}."""
    if n < 4 or n % 2 != 0:
        raise ValueError("barbell needs even n >= 4")
    h = n // 2
    edges = set()
    for u in range(1, h + 1):
        for v in range(u + 1, h + 1):
            edges.add((u, v))
    for u in range(h + 1, n + 1):
        for v in range(u + 1, n + 1):
            edges.add((u, v))
    edges.add((h, h + 1))
    return Graph(n, frozenset(edges))


def cayley_graph(table, generators) -> Graph:
    """Cayley graph (right multiplication) of a validated group table."""
    n = validate_group_table(table)
    return Graph(n, frozenset(cayley_edges(table, generators)))


def random_regular_graph(n: int, d: int, seed: int) -> Graph:
    """d-regular graph via the pairing model, rejecting bad samples.

    The seed fully determines the output, including all rejection retries.
    """
    if d < 1 or d >= n:
        raise ValueError("need 1 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(1, n + 1) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, frozenset(edges)) if _edges_connected(n, edges) else None
        if g is not None:
            return g


def _edges_connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * (n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


_BUILDERS = {
    "hypercube": lambda p: hypercube_graph(p["dim"]),
    "grid": lambda p: grid_graph(p["side"]),
    "clique": lambda p: clique_graph(p["n"]),
    "ring": lambda p: ring_graph(p["n"]),
    "barbell": lambda p: barbell_graph(p["n"]),
    "random_regular": lambda p: random_regular_graph(p["n"], p["d"], p.get("seed", 0)),
}


def build_graph(spec: GraphSpec) -> Graph:
    """Construct the canonical graph of a family; deterministic per spec."""
    if spec.kind == "cayley":
        if spec.table is None or spec.generators is None:
            raise ValueError("cayley spec needs a multiplication table and generators")
        return cayley_graph(spec.table, spec.generators)
    try:
        builder = _BUILDERS[spec.kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {spec.kind!r}") from None
    return builder(spec.params)


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, src: int) -> list:
    """Hop counts from src; index 0 is unused padding."""
    if not (1 <= src <= g.n):
        raise ValueError(f"source {src} outside 1..{g.n}")
    dist = [-1] * (g.n + 1)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_metrics(g: Graph) -> dict:
    """Max degree and exact diameter (all-sources BFS)."""
    max_degree = max(g.degree(v) for v in g.vertices())
    diameter = 0
    for v in g.vertices():
        dist = bfs_distances(g, v)
        diameter = max(diameter, max(dist[1:]))
    return {"max_degree": max_degree, "diameter": diameter}


def edge_expansion_exact(g: Graph, cap: int | None = None) -> Fraction:
    """Exact expansion: min over nonempty S, |S| <= n/2, of cut(S)/|S|.

    Enumerates all subsets with a Gray-code incremental cut count, so the
    vertex count is capped (default 20).
    """
    check_cap("edge_expansion_exact", g.n, cap, EXPANSION_CAP_DEFAULT)
    n = g.n
    if n == 1:
        raise ValueError("expansion undefined on a single vertex")
    adj_mask = [0] * (n + 1)
    for u, v in g.edges:
        adj_mask[u] |= 1 << (v - 1)
        adj_mask[v] |= 1 << (u - 1)
    deg = [0] + [g.degree(v) for v in g.vertices()]
    best = None
    members = 0
    size = 0
    cut = 0
    for i in range(1, 1 << n):
        j = (i & -i).bit_length() - 1  # toggled vertex, 0-based
        bit = 1 << j
        v = j + 1
        if members & bit:
            members ^= bit
            cut -= deg[v] - 2 * (adj_mask[v] & members).bit_count()
            size -= 1
        else:
            cut += deg[v] - 2 * (adj_mask[v] & members).bit_count()
            members ^= bit
            size += 1
        if size >= 1 and 2 * size <= n:
            ratio = Fraction(cut, size)
            if best is None or ratio < best:
                best = ratio
    return best


def _delta_size(adj_mask, members_a, members_h) -> int:
    """|delta(A)| within H: vertices of H outside A adjacent to A."""
    reach = 0
    m = members_a
    while m:
        low = m & -m
        reach |= adj_mask[low.bit_length()]
        m ^= low
    return (reach & members_h & ~members_a).bit_count()


def separation_number_exact(g: Graph, cap: int | None = None) -> int:
    """Exact separation number by double subset enumeration.

    s = max over H of min over A subset of H with |H|/4 <= |A| <= 3|H|/4 of
    |delta(A)|, where delta(A) collects the vertices of H outside A that
    are adjacent to A.  Restricting the boundary to H is what makes the
    barbell value n/8: an unrestricted boundary would let two-vertex
    subsets H push the maximum up to nearly the maximum degree.  The size
    window is a real inequality on integer |A|, so subsets H of size < 2
    admit no valid A and are skipped.
    """
    check_cap("separation_number_exact", g.n, cap, SEPARATION_CAP_DEFAULT)
    n = g.n
    adj_mask = [0] * (n + 1)
    for u, v in g.edges:
        adj_mask[u] |= 1 << (v - 1)
        adj_mask[v] |= 1 << (u - 1)
    best = 0
    for h_mask in range(1, 1 << n):
        h_size = h_mask.bit_count()
        if h_size < 2:
            continue
        inner = None
        a_mask = h_mask
        while True:
            a_size = a_mask.bit_count()
            if 4 * a_size >= h_size and 4 * a_size <= 3 * h_size:
                d = _delta_size(adj_mask, a_mask, h_mask)
                if inner is None or d < inner:
                    inner = d
                    if inner <= best:
                        break  # this H cannot improve the max
            if a_mask == 0:
                break
            a_mask = (a_mask - 1) & h_mask
        if inner is not None and inner > best:
            best = inner
    return best


def separation_number_barbell_exact(n: int) -> int:
    """Separation number of the barbell graph, exhaustive up to symmetry.

    Subsets are invariant under permuting the non-bridge vertices within
    each clique, so H and A are enumerated by the counts (non-bridge picks,
    bridge flag) per side.  Agrees with separation_number_exact on sizes
    where both run.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("barbell needs even n >= 4")
    h = n // 2  # clique size; bridge endpoints are vertex h and h+1

    def delta(a1, i1, a2, i2, b1, j1, b2, j2):
        # a/i: A's non-bridge count and bridge flag per side; b/j: H's.
        # Boundary is restricted to H, mirroring separation_number_exact.
        out = 0
        if a1 + i1 > 0:
            out += b1 - a1  # H's non-bridge clique-1 vertices outside A
        if j1 == 1 and i1 == 0 and (a1 > 0 or i2 == 1):
            out += 1  # bridge vertex h
        if a2 + i2 > 0:
            out += b2 - a2
        if j2 == 1 and i2 == 0 and (a2 > 0 or i1 == 1):
            out += 1  # bridge vertex h+1
        return out

    best = 0
    for b1 in range(h):  # non-bridge count of H on side 1
        for j1 in (0, 1):
            for b2 in range(h):
                for j2 in (0, 1):
                    h_size = b1 + j1 + b2 + j2
                    if h_size < 2:
                        continue
                    inner = None
                    for a1 in range(b1 + 1):
                        for i1 in range(j1 + 1):
                            for a2 in range(b2 + 1):
                                for i2 in range(j2 + 1):
                                    a_size = a1 + i1 + a2 + i2
                                    if 4 * a_size < h_size or 4 * a_size > 3 * h_size:
                                        continue
                                    d = delta(a1, i1, a2, i2, b1, j1, b2, j2)
                                    if inner is None or d < inner:
                                        inner = d
                    if inner is not None and inner > best:
                        best = inner
    return best


def relabel(g: Graph, perm: dict) -> Graph:
    """Apply a vertex permutation {old: new}; used by invariance checks."""
    return from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))
