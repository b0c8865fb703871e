#!/usr/bin/env python3
"""Shifting and inversion: the operations that preserve balanced cycles.

Shifting by g at v multiplies in-arc labels by g^-1 on the right and
out-arc labels by g on the left; every cycle value is conjugated, so the
set of balanced cycles is untouched.  Inversion transposes the digraph and
inverts labels, reversing every balanced cycle.
"""

from balanced_cycles import (cyclic_group, enumerate_balanced_cycles, invert,
                             normalize, random_labelling, shift,
                             shifting_equivalent)

z5 = cyclic_group(5)
L = random_labelling(z5, 5, seed=2024)
print("random Z5 labelling on 5 vertices:")
print(L.labels)

balanced = [c.vertices for c in enumerate_balanced_cycles(L)]
print(f"\nbalanced cycles: {balanced}")

shifted = shift(shift(L, 2, 3), 0, 1)
print("\nafter shifting by 3 at vertex 2 and by 1 at vertex 0:")
print(shifted.labels)
print(f"balanced cycles unchanged: "
      f"{[c.vertices for c in enumerate_balanced_cycles(shifted)] == balanced}")

flipped = invert(L)
print(f"\ninversion reverses witnesses: {[c.vertices for c in enumerate_balanced_cycles(flipped)]}")
print(f"inv(inv(L)) == L: {invert(flipped) == L}")

norm = normalize(L, 0)
print(f"\nnormal form at vertex 0: out-row becomes identity: {norm.labels[0].tolist()}")
family = shifting_equivalent(L, shifted)
print(f"equivalence decision returns the per-vertex witness family: {family}")
print(f"unrelated labelling equivalent? "
      f"{shifting_equivalent(L, random_labelling(z5, 5, seed=999)) is not None}")
