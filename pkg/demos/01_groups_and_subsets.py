#!/usr/bin/env python3
"""Finite groups as Cayley tables, and the subset algebra on top of them.

Walks through the stock catalog, stabilizers of subsets, cosets, and the
set-growth lemma |{1,x}S| >= |S| + |stab_r(S)| that powers tuple
augmentation.
"""

from balanced_cycles import (catalog, cosets, cyclic_group, grow_set,
                             metacyclic_group, stabilizer, subgroup_closure,
                             subset_elements, subset_of)

print("=== the group catalog ===")
for name, group in catalog().items():
    kind = "abelian" if group.is_abelian() else "non-abelian"
    print(f"  {name:10s} order {group.order:2d}  {kind}")

print("\n=== F21, the non-abelian group of order 21 ===")
f21 = metacyclic_group(7, 3, 2)
print("pairs (a, b) with (a,b)*(c,d) = (a + 2^b c mod 7, b+d mod 3), index = 3a + b")
print(f"(0,1)*(1,0) = index {f21.mul(1, 3)}  but  (1,0)*(0,1) = index {f21.mul(3, 1)}")

print("\n=== stabilizers ===")
z9 = cyclic_group(9)
s = subset_of([0, 3, 6])
print(f"S = {subset_elements(s)} in Z9")
print(f"stab_l(S) = {subset_elements(stabilizer(z9, s, 'left'))}")
print(f"stab_r(S) = {subset_elements(stabilizer(z9, s, 'right'))}")
print(f"left cosets of S: {[subset_elements(c) for c in cosets(z9, s, 'left')]}")
print(f"<3> = {subset_elements(subgroup_closure(z9, [3]))}")

print("\n=== the set-growth lemma ===")
print("for x outside stab_l(S): |{1,x}S| >= |S| + |stab_r(S)|")
grown = grow_set(z9, s, 1)
print(f"{{1, 1}} * {subset_elements(s)} = {subset_elements(grown)}  "
      f"(size {grown.bit_count()} >= {s.bit_count()} + 3)")
grown2 = grow_set(z9, grown, 2)
print(f"grow again by 2: {subset_elements(grown2)}  (all of Z9)")
