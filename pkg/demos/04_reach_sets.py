#!/usr/bin/env python3
"""Reach sets by subset DP: which products are attainable by simple paths.

The state space is (vertex subset, endpoint); values are bitmasks over
group elements, so one DP transition is a handful of word operations.
Exact balanced-cycle detection closes start-anchored paths back onto their
minimum vertex.
"""

import time

from balanced_cycles import (cyclic_group, extremal_cyclic,
                             find_balanced_cycle, find_path_with_value,
                             random_labelling, reach_set, reach_set_between,
                             reach_table, subset_elements)

L = extremal_cyclic(3, 3)
print("extremal Z3 on 3 vertices; reach sets R(V, x):")
for x in range(3):
    print(f"  x={x}: {subset_elements(reach_set(L, range(3), x))}")

print("\nexact-vertex-set table entries (mask, endpoint) -> values:")
table = reach_table(L, range(3))
for mask in sorted(table.table):
    for e, bits in sorted(table.table[mask].items()):
        print(f"  mask {bin(mask)[2:]:>3s} end {e}: {subset_elements(bits)}")

L4 = extremal_cyclic(3, 4)
print(f"\nu-to-v values 0->3 inside extremal(3,4): "
      f"{subset_elements(reach_set_between(L4, range(4), 0, 3))}")
print(f"a path realizing value 0: {find_path_with_value(L4, range(4), 0, 3, 0)}")

z9 = cyclic_group(9)
M = random_labelling(z9, 10, seed=7)
started = time.perf_counter()
witness = find_balanced_cycle(M)
elapsed = time.perf_counter() - started
print(f"\nrandom Z9 labelling on 10 vertices: balanced cycle {witness.vertices} "
      f"found in {elapsed*1000:.1f} ms")

started = time.perf_counter()
reach_table(M, range(10))
print(f"full 2^10-mask reach table: {time.perf_counter()-started:.3f} s")
