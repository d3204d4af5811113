"""Staircase hard instances over a path system.

A milestone sequence x = (x_1, ..., x_{L+1}) with x_1 = 1 induces a walk
(the staircase) by concatenating the system's paths between consecutive
milestones.  The value function decreases along the staircase and equals
the hop distance to vertex 1 everywhere else, so the unique local minimum
sits at the end of the walk; an extra per-vertex flag hides one bit there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, bfs_distances
from .pathsystems import PathSystem

# Rational upper bound on 1/(2e), used to check lower bounds of the form
# sum >= (1/2e) * core conservatively in exact arithmetic.
ONE_OVER_2E_UPPER = Fraction(184, 1000)


@dataclass(frozen=True)
class Staircase:
    """Concatenated walk plus the start index of each quasi-segment.

    segment_starts[i] is the walk position (0-based) of milestone x_{i+1},
    i.e. where quasi-segment i+1 begins; junction vertices are stored once.
    """

    walk: tuple
    segment_starts: tuple

    @property
    def end(self) -> int:
        return self.walk[-1]


def check_milestones(x, n: int) -> None:
    if len(x) < 1:
        raise ValueError("milestone sequence is empty")
    if x[0] != 1:
        raise ValueError("milestone sequence must start at vertex 1")
    for v in x:
        if not (1 <= v <= n):
            raise ValueError(f"milestone {v} outside 1..{n}")


def build_staircase(x, ps: PathSystem) -> Staircase:
    """Concatenate ps entries between consecutive milestones."""
    check_milestones(x, ps.n)
    walk = [x[0]]
    starts = []
    for a, b in zip(x, x[1:]):
        starts.append(len(walk) - 1)
        seg = ps.path(a, b)
        walk.extend(seg[1:])
    return Staircase(tuple(walk), tuple(starts))


def is_good(x) -> bool:
    """True iff all milestones are pairwise distinct."""
    return len(set(x)) == len(x)


def multiplicity(q, u: int) -> int:
    """Number of times vertex u appears in the sequence q."""
    return sum(1 for v in q if v == u)


def tail(j: int, s: Staircase) -> tuple:
    """Suffix of the walk from quasi-segment j, minus the first occurrence
    of milestone x_j; empty for j = L+1."""
    segments = len(s.segment_starts)
    if not (1 <= j <= segments + 1):
        raise ValueError(f"tail index {j} outside 1..{segments + 1}")
    if j == segments + 1:
        return ()
    return s.walk[s.segment_starts[j - 1] + 1:]


def value_function(x, ps: PathSystem, g: Graph) -> dict:
    """The staircase value function as a vertex -> int map.

    Off the walk the value is dist(v, 1); on the walk it is -(i*n + j)
    where i is the largest quasi-segment index whose path contains v and
    j is v's position within that path.
    """
    check_milestones(x, g.n)
    dist = bfs_distances(g, 1)
    values = {v: dist[v] for v in g.vertices()}
    n = g.n
    for i, (a, b) in enumerate(zip(x, x[1:]), start=1):
        seg = ps.path(a, b)
        for pos, v in enumerate(seg, start=1):
            values[v] = -(i * n + pos)
    return values


@dataclass(frozen=True)
class HiddenBitInstance:
    """A staircase function with its hidden bit and full provenance.

    values maps each vertex to the staircase value; flags carry the hidden
    bit at the walk's last vertex and -1 everywhere else.  oracle() is the
    point of entry for solvers and the adversary machinery.
    """

    milestones: tuple
    bit: int
    staircase: Staircase
    values: dict
    flags: dict

    def oracle(self, v: int):
        return (self.values[v], self.flags[v])

    @property
    def minimum(self) -> int:
        return self.staircase.end


def hide_bit(values: dict, staircase: Staircase, bit: int, x=None) -> HiddenBitInstance:
    """Attach the hidden bit at the walk's last vertex, -1 elsewhere."""
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    flags = {v: -1 for v in values}
    flags[staircase.end] = bit
    return HiddenBitInstance(
        milestones=tuple(x) if x is not None else (),
        bit=bit,
        staircase=staircase,
        values=dict(values),
        flags=flags,
    )


def make_instance(x, bit: int, ps: PathSystem, g: Graph) -> HiddenBitInstance:
    """Build the full hidden-bit instance for a milestone sequence."""
    s = build_staircase(x, ps)
    values = value_function(x, ps, g)
    inst = hide_bit(values, s, bit, x=x)
    return inst


# ---------------------------------------------------------------------------
# The relation and its refinements
# ---------------------------------------------------------------------------


def shared_prefix_length(x, y) -> int:
    """Largest j with x_{1..j} = y_{1..j} (0 if first entries differ)."""
    j = 0
    for a, b in zip(x, y):
        if a != b:
            break
        j += 1
    return j


def relation_congestion(x, b1: int, y, b2: int, n: int) -> int:
    """r(g_{x,b1}, g_{y,b2}): 0 for equal bits or a bad sequence, else n^j.

    The result is an exact Python int; n^{L+1} routinely exceeds 64 bits.
    """
    if len(x) != len(y):
        raise ValueError("milestone sequences must share their length")
    if x[0] != 1 or y[0] != 1:
        raise ValueError("milestone sequences must start at vertex 1")
    if b1 == b2 or not is_good(x) or not is_good(y):
        return 0
    return n ** shared_prefix_length(x, y)


def distinguishing_weights(v: int, f1: HiddenBitInstance, f2: HiddenBitInstance,
                           n: int | None = None) -> tuple:
    """(r, r_v, r~_v) for a vertex and two provenance-carrying functions.

    r_v keeps r only where the functions disagree at v; r~_v additionally
    requires the first walk to visit v at most as often as the second.
    """
    if n is None:
        n = len(f1.values)
    r = relation_congestion(f1.milestones, f1.bit, f2.milestones, f2.bit, n)
    if r == 0:
        return 0, 0, 0
    r_v = r if f1.oracle(v) != f2.oracle(v) else 0
    if r_v == 0:
        return r, 0, 0
    mu1 = multiplicity(f1.staircase.walk, v)
    mu2 = multiplicity(f2.staircase.walk, v)
    r_tilde = r_v if mu1 <= mu2 else 0
    return r, r_v, r_tilde


def count_good_with_prefix(x, j: int, n: int) -> int:
    """Closed-form count of good sequences whose longest shared prefix with
    the good sequence x is exactly j: (n-j-1) * prod_{i=j+2}^{L+1}(n-i+1)."""
    length = len(x)  # L + 1
    if not is_good(x):
        raise ValueError("reference sequence must be good")
    if not (1 <= j <= length - 1):
        raise ValueError(f"prefix length {j} outside 1..{length - 1}")
    count = n - j - 1
    for i in range(j + 2, length + 1):
        count *= n - i + 1
    return count


def tail_count_bound(psi_at_xj: int, g_cong: int, n: int, L: int, j: int) -> Fraction:
    """Counting bound psi_v(x_j)*n^(L-j) + L*g*n^(L-j-1) on the number of
    sequences agreeing with x through j whose tail visits v.

    Exact rational; the second term is fractional at j = L.
    """
    return psi_at_xj * n ** (L - j) + Fraction(L * g_cong * n ** (L - j), n)


# ---------------------------------------------------------------------------
# Validity and local minima
# ---------------------------------------------------------------------------


def validate_function(values: dict, walk, g: Graph) -> bool:
    """Check the three validity conditions of a function against a walk:
    strictly decreasing in last-occurrence order along the walk, equal to
    dist(walk start, .) off the walk, and nonpositive on the walk."""
    last = {}
    for idx, v in enumerate(walk):
        last[v] = idx
    order = sorted(last, key=last.get)
    for a, b in zip(order, order[1:]):
        if not values[a] > values[b]:
            return False
    dist = bfs_distances(g, walk[0])
    on_walk = set(walk)
    for v in g.vertices():
        if v in on_walk:
            if values[v] > 0:
                return False
        elif values[v] != dist[v]:
            return False
    return True


def local_minima(g: Graph, values: dict) -> set:
    """All vertices no neighbor improves on."""
    return {
        v for v in g.vertices()
        if all(values[v] <= values[u] for u in g.neighbors(v))
    }


# ---------------------------------------------------------------------------
# Hard-instance sampling
# ---------------------------------------------------------------------------


def sample_milestones(n: int, L: int, rng: random.Random) -> tuple:
    """Vertex 1 followed by L distinct vertices drawn uniformly from 2..n.

    Sampling without replacement makes every good sequence equally likely,
    which is exactly the relation-induced hard distribution restricted to
    good functions.
    """
    if L + 1 > n:
        raise ValueError(f"need L + 1 <= n, got L={L}, n={n}")
    return (1, *rng.sample(range(2, n + 1), L))


def sample_hard_instance(g: Graph, ps: PathSystem, L: int, seed) -> HiddenBitInstance:
    """Seed-deterministic draw of (milestones, bit) plus the built instance."""
    rng = random.Random(seed)
    x = sample_milestones(g.n, L, rng)
    bit = rng.randrange(2)
    return make_instance(x, bit, ps, g)
