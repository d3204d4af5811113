"""Evaluation of the variant relational adversary and the original one.

For a finite family of labelled functions with a symmetric relation r,
the variant bound is min over subsets Z with q(Z) > 0 of
M(Z) / (100 * q(Z)), where M(Z) sums r(F1, F2) over F1 in Z and F2 in the
whole family, and q(Z) is the largest single-point distinguishing mass
within Z.  Both double sums run over ordered pairs, so a symmetric pair
contributes twice; this matches the matrix-game arithmetic.

All weights are exact integers and all ratios exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import check_cap
from .graphs import Graph
from .pathsystems import PathSystem
from .staircase import make_instance, relation_congestion

SUBSET_CAP_DEFAULT = 16
FAMILY_CAP_DEFAULT = 10_000


@dataclass(frozen=True)
class FunctionFamily:
    """Finite functions over a shared finite domain, each labelled 0 or 1.

    domain lists the query points; functions[i] is a tuple of answers
    aligned with domain; labels[i] is the hidden label of function i.
    """

    name: str
    domain: tuple
    functions: tuple
    labels: tuple

    def __post_init__(self):
        k = len(self.domain)
        for f in self.functions:
            if len(f) != k:
                raise ValueError("function table does not match the domain")
        if len(self.labels) != len(self.functions):
            raise ValueError("labels must cover every function")
        if any(lab not in (0, 1) for lab in self.labels):
            raise ValueError("labels must be 0 or 1")

    @property
    def size(self) -> int:
        return len(self.functions)


@dataclass(frozen=True)
class Relation:
    """Symmetric nonnegative integer weights, zero on equal labels."""

    weights: tuple = field(repr=False)

    @staticmethod
    def build(fam: FunctionFamily, weight_fn) -> "Relation":
        size = fam.size
        w = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                w[i][j] = w[j][i] = weight_fn(i, j)
        rel = Relation(tuple(tuple(row) for row in w))
        rel.validate(fam)
        return rel

    def validate(self, fam: FunctionFamily) -> None:
        size = fam.size
        if len(self.weights) != size or any(len(r) != size for r in self.weights):
            raise ValueError("relation shape does not match the family")
        nonzero = False
        for i in range(size):
            for j in range(size):
                wij = self.weights[i][j]
                if wij < 0:
                    raise ValueError("relation weights must be nonnegative")
                if wij != self.weights[j][i]:
                    raise ValueError("relation is not symmetric")
                if wij and fam.labels[i] == fam.labels[j]:
                    raise ValueError("relation must vanish on equal labels")
                nonzero = nonzero or wij > 0
        if not nonzero:
            raise ValueError("relation is identically zero")


def big_m(fam: FunctionFamily, rel: Relation, z) -> int:
    """M(Z) = sum over F1 in Z, F2 in the whole family of r(F1, F2)."""
    return sum(sum(rel.weights[i]) for i in z)


def big_q(fam: FunctionFamily, rel: Relation, z) -> int:
    """q(Z) = max over domain points of the ordered distinguishing sum."""
    z = list(z)
    best = 0
    for a in range(len(fam.domain)):
        total = 0
        for i in z:
            fi = fam.functions[i][a]
            row = rel.weights[i]
            for j in z:
                if row[j] and fi != fam.functions[j][a]:
                    total += row[j]
        best = max(best, total)
    return best


@dataclass(frozen=True)
class VariantBound:
    min_ratio: Fraction
    bound: Fraction
    argmin: tuple


def variant_bound_exhaustive(fam: FunctionFamily, rel: Relation,
                             cap: int | None = None) -> VariantBound:
    """Exact min of M(Z)/q(Z) over all subsets with q(Z) > 0, and /100.

    Iterates subsets in Gray-code order, maintaining M and the per-point
    distinguishing sums incrementally.
    """
    size = fam.size
    check_cap("variant_bound_exhaustive", size, cap, SUBSET_CAP_DEFAULT)
    npoints = len(fam.domain)
    row_mass = [sum(rel.weights[i]) for i in range(size)]
    # Differing points per related pair; pairs with zero weight never matter.
    diff = {}
    for i in range(size):
        for j in range(i + 1, size):
            if rel.weights[i][j]:
                pts = [a for a in range(npoints)
                       if fam.functions[i][a] != fam.functions[j][a]]
                diff[(i, j)] = pts

    members = 0
    in_z = [False] * size
    m_z = 0
    d = [0] * npoints  # ordered distinguishing sum per point
    best = None
    argmin = None

    def toggle(i: int, sign: int) -> None:
        nonlocal m_z
        w = rel.weights[i]
        for j in range(size):
            if in_z[j] and j != i and w[j]:
                pts = diff.get((min(i, j), max(i, j)), ())
                delta = 2 * sign * w[j]
                for a in pts:
                    d[a] += delta
        m_z += sign * row_mass[i]

    for step in range(1, 1 << size):
        i = (step & -step).bit_length() - 1
        if in_z[i]:
            in_z[i] = False
            toggle(i, -1)
            members ^= 1 << i
        else:
            toggle(i, +1)
            in_z[i] = True
            members ^= 1 << i
        q = max(d) if d else 0
        if q > 0:
            ratio = Fraction(m_z, q)
            if best is None or ratio < best:
                best = ratio
                argmin = members
    if best is None:
        raise ValueError("no subset has q(Z) > 0: relation is degenerate")
    subset = tuple(i for i in range(size) if (argmin >> i) & 1)
    return VariantBound(best, best / 100, subset)


@dataclass(frozen=True)
class AaronsonBound:
    v_min: Fraction
    bound: Fraction


def aaronson_vmin(fam: FunctionFamily, rel: Relation,
                  partition=None) -> AaronsonBound:
    """v_min and 1/(5 v_min) of the original relational adversary.

    partition is a pair (A, B) of function index sets with labels 0 and 1;
    the full label classes are used when omitted.  theta denominators are
    only evaluated at visited triples, i.e. pairs with positive weight that
    disagree at the queried point; a vanishing denominator there is an
    error naming the triple.
    """
    if partition is None:
        a_set = [i for i in range(fam.size) if fam.labels[i] == 0]
        b_set = [i for i in range(fam.size) if fam.labels[i] == 1]
    else:
        a_set, b_set = (list(partition[0]), list(partition[1]))
        for i in a_set:
            if fam.labels[i] != 0:
                raise ValueError(f"function {i} in the 0-side has label 1")
        for i in b_set:
            if fam.labels[i] != 1:
                raise ValueError(f"function {i} in the 1-side has label 0")
    denom_a = {i: sum(rel.weights[i][j] for j in b_set) for i in a_set}
    denom_b = {j: sum(rel.weights[i][j] for i in a_set) for j in b_set}

    v_min = None
    for i in a_set:
        row = rel.weights[i]
        for j in b_set:
            if not row[j]:
                continue
            for a in range(len(fam.domain)):
                fia = fam.functions[i][a]
                fja = fam.functions[j][a]
                if fia == fja:
                    continue
                if denom_a[i] == 0 or denom_b[j] == 0:
                    raise ValueError(
                        f"zero theta denominator at triple (F{i}, F{j}, point {a})"
                    )
                num_i = sum(row[j2] for j2 in b_set
                            if fam.functions[j2][a] != fia)
                num_j = sum(rel.weights[i2][j] for i2 in a_set
                            if fam.functions[i2][a] != fja)
                theta = min(Fraction(num_i, denom_a[i]),
                            Fraction(num_j, denom_b[j]))
                if v_min is None or theta > v_min:
                    v_min = theta
    if v_min is None or v_min == 0:
        raise ValueError("no distinguishing triple with positive relation")
    return AaronsonBound(v_min, Fraction(1, 5) / v_min)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def family_matrix_game(k: int):
    """Row/column matrices over a k x k board with the indicator relation.

    Functions are the k row matrices (one row of 1s, label 0) followed by
    the k column matrices (one column of 2s, label 1); the domain is the
    k^2 cells in row-major order.
    """
    if k < 2:
        raise ValueError("matrix game needs k >= 2")
    domain = tuple((r, c) for r in range(1, k + 1) for c in range(1, k + 1))
    functions = []
    labels = []
    for i in range(1, k + 1):
        functions.append(tuple(1 if r == i else 0 for (r, _) in domain))
        labels.append(0)
    for j in range(1, k + 1):
        functions.append(tuple(2 if c == j else 0 for (_, c) in domain))
        labels.append(1)
    fam = FunctionFamily("matrix_game", domain, tuple(functions), tuple(labels))
    rel = Relation.build(fam, lambda i, j: int(fam.labels[i] != fam.labels[j]))
    return fam, rel


def family_staircase(g: Graph, ps: PathSystem, L: int, cap: int | None = None):
    """Full staircase function family with its prefix-power relation.

    Materializes all 2 * n^L hidden-bit functions, so the family size is
    capped (default 10^4).  Also returns the provenance instances aligned
    with the family's function order.
    """
    n = g.n
    size = 2 * n ** L
    check_cap("family_staircase", size, cap, FAMILY_CAP_DEFAULT)
    sequences = [(1,)]
    for _ in range(L):
        sequences = [s + (v,) for s in sequences for v in range(1, n + 1)]
    domain = tuple(g.vertices())
    instances = []
    functions = []
    labels = []
    for x in sequences:
        for bit in (0, 1):
            inst = make_instance(x, bit, ps, g)
            instances.append(inst)
            functions.append(tuple(inst.oracle(v) for v in domain))
            labels.append(bit)
    fam = FunctionFamily(f"staircase_n{n}_L{L}", domain,
                         tuple(functions), tuple(labels))

    def weight(i, j):
        return relation_congestion(
            instances[i].milestones, instances[i].bit,
            instances[j].milestones, instances[j].bit, n,
        )

    rel = Relation.build(fam, weight)
    return fam, rel, instances


# ---------------------------------------------------------------------------
# Matrix game solver
# ---------------------------------------------------------------------------


def matrix_game_diagonal_solver(oracle, k: int):
    """Query the main diagonal until a 1 (row) or 2 (column) appears.

    oracle maps a (row, col) cell to its value.  Returns (label, queries)
    with label 0 for row and 1 for column, in at most k queries.
    """
    for q, i in enumerate(range(1, k + 1), start=1):
        val = oracle((i, i))
        if val == 1:
            return 0, q
        if val == 2:
            return 1, q
    raise ValueError("all-zero diagonal: oracle is not a row/column matrix")
