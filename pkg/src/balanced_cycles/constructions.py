"""Generators for extremal and randomized test instances."""

from __future__ import annotations

import numpy as np

from .errors import BadIndex, BadSize
from .groups import FiniteGroup, cyclic_group
from .labellings import Labelling
from .rng import Xoshiro256StarStar

MAX_VERTICES = 64


def extremal_cyclic(q: int, n: int) -> Labelling:
    """The lower-bound construction over Z_q on n ordered vertices.

    Increasing arcs (u < v) carry the generator 1, decreasing arcs the
    identity 0, so a cycle's value equals its number of increasing arcs
    mod q.  On at most q vertices that count lies in 1..n-1 and never hits
    zero; on q+1 vertices exactly one cycle is balanced, the increasing
    Hamiltonian cycle closed by its single decreasing arc.
    """
    if q < 2:
        raise BadSize(f"extremal construction needs q >= 2, got {q}")
    if not 2 <= n <= MAX_VERTICES:
        raise BadSize(f"vertex count {n} outside 2..{MAX_VERTICES}")
    labels = np.zeros((n, n), dtype=np.int64)
    labels[np.triu_indices(n, k=1)] = 1
    return Labelling(cyclic_group(q), labels)


def arc_critical_instance(q: int, deleted_arc_index: int) -> Labelling:
    """extremal_cyclic(q, q+1) with one arc of its unique balanced cycle removed.

    The q+1 cycle arcs are indexed in increasing-cycle order: arc k is
    (k, k+1) for k < q and arc q is the closing arc (q, 0).  Deleting any
    one of them leaves no balanced cycle at all.
    """
    if q < 2:
        raise BadSize(f"arc-critical instance needs q >= 2, got {q}")
    if not 0 <= deleted_arc_index <= q:
        raise BadIndex(f"arc index {deleted_arc_index} outside 0..{q}")
    base = extremal_cyclic(q, q + 1)
    if deleted_arc_index < q:
        u, v = deleted_arc_index, deleted_arc_index + 1
    else:
        u, v = q, 0
    present = base.present.copy()
    present[u, v] = False
    return Labelling(base.group, base.labels, present)


def random_labelling(group: FiniteGroup, n: int, seed: int) -> Labelling:
    """Uniform independent labels from a pinned generator.

    Stream: xoshiro256** seeded with SplitMix64(seed); draws are masked
    rejection on the top bits, one per off-diagonal arc in row-major order.
    Identical (group, n, seed) give identical labellings on every platform.
    """
    if not 2 <= n <= MAX_VERTICES:
        raise BadSize(f"vertex count {n} outside 2..{MAX_VERTICES}")
    rng = Xoshiro256StarStar(seed)
    order = group.order
    labels = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if u != v:
                labels[u, v] = rng.below(order)
    return Labelling(group, labels)
