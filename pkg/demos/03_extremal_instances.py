#!/usr/bin/env python3
"""The lower-bound family: generator on increasing arcs, identity below.

Over Z_q on q vertices every cycle value counts its increasing arcs, which
lies in 1..q-1, so nothing is balanced.  One extra vertex creates exactly
one balanced cycle, and that instance is arc-critical: deleting any arc of
the unique cycle kills balancedness everywhere.
"""

from balanced_cycles import (arc_critical_instance, enumerate_balanced_cycles,
                             extremal_cyclic, to_dot)

for q in (3, 5, 7):
    tight = extremal_cyclic(q, q)
    loose = extremal_cyclic(q, q + 1)
    print(f"q={q}: on {q} vertices {len(enumerate_balanced_cycles(tight))} balanced cycles, "
          f"on {q+1} vertices {[c.vertices for c in enumerate_balanced_cycles(loose)]}")

print("\narc-criticality at q=5: delete each arc of the unique balanced cycle")
for k in range(6):
    inst = arc_critical_instance(5, k)
    print(f"  arc {k} deleted -> {len(enumerate_balanced_cycles(inst))} balanced cycles")

print("\nDOT rendering of extremal(3,4) with its unique witness highlighted:")
witness = enumerate_balanced_cycles(extremal_cyclic(3, 4))[0]
print(to_dot(extremal_cyclic(3, 4), witness))
