#!/usr/bin/env python3
"""Walkthrough: exact adversary bounds on small families.

Compares the subset-ratio bound min M(Z)/(100 q(Z)) against the original
pairwise bound 1/(5 v_min) on the row/column matrix game, then evaluates
both on a fully materialized staircase family.
"""

from fractions import Fraction

import lsqlab as L

print("Matrix game: k row matrices vs k column matrices, indicator relation")
print("-" * 70)
for k in (2, 3, 4):
    fam, rel = L.family_matrix_game(k)
    vb = L.variant_bound_exhaustive(fam, rel)
    ab = L.aaronson_vmin(fam, rel)
    closed = Fraction(k * k, 2 * k - 1)
    print(f"k={k}: |family|={fam.size}")
    print(f"  exhaustive min M(Z)/q(Z) = {vb.min_ratio} "
          f"(closed form k^2/(2k-1) = {closed})")
    print(f"  argmin subset: {list(vb.argmin)}")
    print(f"  subset-ratio bound: {vb.bound};  v_min = {ab.v_min}, "
          f"pairwise bound: {ab.bound}")
    # constant-free comparison: the raw ratio grows with k, 1/v_min cannot
    assert vb.min_ratio > 1 / ab.v_min
print()
print("The raw ratio k^2/(2k-1) grows linearly in k while 1/v_min is stuck")
print("at 1: on this family the subset method is strictly stronger.")
print()

print("Diagonal queries solve the game in at most k queries:")
fam, _ = L.family_matrix_game(4)
idx = {cell: i for i, cell in enumerate(fam.domain)}
for fi in (0, 5):
    label, queries = L.matrix_game_diagonal_solver(
        lambda cell: fam.functions[fi][idx[cell]], 4)
    kind = "row" if label == 0 else "column"
    print(f"  input {fi}: declared {kind} after {queries} queries")
print()

print("Staircase family on K4 with L = 1 (8 functions)")
print("-" * 70)
g = L.clique_graph(4)
ps = L.shortest_path_system(g)
fam, rel, insts = L.family_staircase(g, ps, 1)
for i, inst in enumerate(insts):
    tag = "good" if L.is_good(inst.milestones) else "bad "
    print(f"  F{i}: milestones {inst.milestones} bit {inst.bit} ({tag}) "
          f"M({{F}}) = {L.big_m(fam, rel, [i])}")
vb = L.variant_bound_exhaustive(fam, rel)
ab = L.aaronson_vmin(fam, rel)
print(f"exhaustive min M/q = {vb.min_ratio} at Z = {list(vb.argmin)}")
print(f"subset-ratio bound {vb.bound}; v_min = {ab.v_min} "
      f"-> pairwise bound {ab.bound}")
print(f"check min M/q >= 1/(2 v_min): {vb.min_ratio} >= {1 / (2 * ab.v_min)}")
