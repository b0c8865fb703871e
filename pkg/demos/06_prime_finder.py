#!/usr/bin/env python3
"""Constructive witnesses over prime-order groups on p+1 vertices.

Over Z_p the only non-trivial subgroup is everything, so the efficient
tuple's value set is forced to be the whole group; closing a u-to-v path
of value -label(v,u) with the back-arc yields a balanced cycle, always.
"""

from collections import Counter

from balanced_cycles import (cycle_value, cyclic_group, extremal_cyclic,
                             prime_finder, random_labelling)

print("the unique balanced cycle of the extremal instance, constructively:")
print(" ", prime_finder(extremal_cyclic(5, 6)).vertices)

for p in (3, 5, 7):
    group = cyclic_group(p)
    lengths = Counter()
    for seed in range(300):
        L = random_labelling(group, p + 1, seed)
        witness = prime_finder(L)
        assert cycle_value(L, witness) == 0
        lengths[len(witness.vertices)] += 1
    print(f"Z{p} on {p+1} vertices, 300 random labellings: "
          f"witness lengths {dict(sorted(lengths.items()))}")
