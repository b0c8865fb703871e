#!/usr/bin/env python3
"""The dichotomy procedure: balanced cycle or stabilizer certificate.

On a balanced-cycle-free complete digraph over a group of matching order,
some reach set R(X, x) has at least |X| values and a non-trivial right
stabilizer.  The procedure is total: on inputs that do have balanced
cycles it either still certifies or returns the cycle it stumbled on.
"""

import numpy as np

from balanced_cycles import (Labelling, cyclic_group, extremal_cyclic,
                             key_lemma, subset_elements)

for q in (3, 5, 7):
    out = key_lemma(extremal_cyclic(q, q))
    cert = out.certificate
    print(f"extremal Z{q}: certificate X={subset_elements(cert.X)} x={cert.x} "
          f"|R|={cert.R.bit_count()} stab_r={subset_elements(cert.right_stab)}")

print("\nall-identity labels: the F-cycle argument finds the balanced cycle itself")
z3 = cyclic_group(3)
print(key_lemma(Labelling(z3, [[0] * 3] * 3)).to_json())

print("\nZ9 labels confined to the subgroup {0,3,6}: small reach sets everywhere,")
print("so the subset collection is non-empty and the F-cycle value lands in stab_r:")
z9 = cyclic_group(9)
labels = np.zeros((4, 4), dtype=np.int64)
labels[np.triu_indices(4, k=1)] = 3
out = key_lemma(Labelling(z9, labels))
print(out.to_json())
