"""Simple-path value sets and exact balanced-cycle detection.

Everything here is bitset subset dynamic programming.  A DP state is a
(vertex mask, endpoint) pair whose value is the set of group elements
attained by simple directed paths with that vertex set and endpoint,
stored as an int bitmask over group elements.  Two table flavours exist:

* ending-anchored, aggregated over sub-vertex-sets: entry (X, x) is the
  full reach set of values of paths inside X ending at x (including the
  length-0 path), built layer by layer so memory stays one popcount level;
* start-anchored with exact vertex set: paths start at a fixed vertex,
  which is how cycles are detected and counted exactly once (every cycle
  is closed from its minimum vertex).

Exact computations are capped at 24 vertices; full-table retention at 20;
cycle enumeration at 12 (output can be exponential).  Beyond the exact cap
only the short-cycle scan is available and a miss is inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .errors import NotInScope, TooLarge
from .groups import subset_elements
from .labellings import CycleWitness, Labelling, cycle_value

EXACT_CAP = 24
TABLE_RETENTION_CAP = 20
ENUMERATION_CAP = 12


def _as_mask(X) -> int:
    if isinstance(X, int):
        return X
    bits = 0
    for v in X:
        bits |= 1 << v
    return bits


def aggregated_reach_layers(L: Labelling, scope) -> Iterator[tuple[int, dict[int, dict[int, int]]]]:
    """Stream aggregated reach sets for every submask of ``scope``.

    Yields (size, layer) with layer = {mask: {endpoint: value_bits}} where
    value_bits is the set of values of simple paths inside ``mask`` ending
    at the endpoint (the length-0 path contributes the identity).  Masks
    within a layer appear in ascending numeric order.  Only one layer is
    alive at a time; the recurrence is

        R[mask][e] = {1} | union over p in mask-e of R[mask-e][p] * label(p, e).
    """
    scope = _as_mask(scope)
    verts = subset_elements(scope)
    rows = L.rows()
    pres = L.present_rows()
    smul = L.group.subset_mul_elem
    layer = {1 << v: {v: 1} for v in verts}
    yield 1, layer
    for size in range(2, len(verts) + 1):
        masks = sorted(sum(1 << v for v in combo) for combo in combinations(verts, size))
        nxt: dict[int, dict[int, int]] = {}
        for mask in masks:
            entry: dict[int, int] = {}
            for e in subset_elements(mask):
                sub_entry = layer[mask ^ (1 << e)]
                acc = 1
                for p, pbits in sub_entry.items():
                    if pres[p][e]:
                        acc |= smul(pbits, rows[p][e])
                entry[e] = acc
            nxt[mask] = entry
        layer = nxt
        yield size, layer


def reach_set(L: Labelling, X, x: int) -> int:
    """Values of simple paths inside X ending at x, as an element bitmask."""
    mask = _as_mask(X)
    if not (mask >> x) & 1:
        raise NotInScope(f"vertex {x} not in the scope")
    if mask.bit_count() > EXACT_CAP:
        raise TooLarge(f"scope larger than the exact cap of {EXACT_CAP}")
    layer = None
    for _, layer in aggregated_reach_layers(L, mask):
        pass
    return layer[mask][x]


def reach_set_between(L: Labelling, X, u: int, v: int) -> int:
    """Values of simple u-to-v paths inside X.

    For u == v only the length-0 path qualifies (simple paths cannot
    return), so the result is the singleton identity.
    """
    mask = _as_mask(X)
    for w in (u, v):
        if not (mask >> w) & 1:
            raise NotInScope(f"vertex {w} not in the scope")
    n_scope = mask.bit_count()
    if n_scope > EXACT_CAP:
        raise TooLarge(f"scope larger than the exact cap of {EXACT_CAP}")
    if u == v:
        return 1
    verts = subset_elements(mask)
    rows = L.rows()
    pres = L.present_rows()
    smul = L.group.subset_mul_elem
    result = 0
    layer = {1 << u: {u: 1}}
    for _ in range(1, n_scope):
        nxt: dict[int, dict[int, int]] = {}
        for m, entry in layer.items():
            for e, bits in entry.items():
                row_e = rows[e]
                pres_e = pres[e]
                for w in verts:
                    if not (m >> w) & 1 and pres_e[w]:
                        value = smul(bits, row_e[w])
                        nentry = nxt.setdefault(m | (1 << w), {})
                        nentry[w] = nentry.get(w, 0) | value
        for m, entry in nxt.items():
            if v in entry:
                result |= entry[v]
        layer = nxt
    return result


@dataclass
class ReachTable:
    """Retained exact-vertex-set DP table: table[mask][e] is the set of
    values of simple paths with vertex set exactly ``mask`` ending at ``e``.
    Missing entries mean no such path exists."""

    base: Labelling
    scope: int
    table: dict[int, dict[int, int]]

    def aggregate(self, x: int) -> int:
        """Union over submasks containing x; equals reach_set(base, scope, x)."""
        acc = 0
        bit = 1 << x
        for mask, entry in self.table.items():
            if mask & bit and x in entry:
                acc |= entry[x]
        return acc


@dataclass
class StartAnchoredTable:
    """Like ReachTable but paths are pinned to start at ``start``.

    Anchoring at the minimum vertex of each scope is what lets cycle
    detection count every cycle exactly once."""

    base: Labelling
    scope: int
    start: int
    table: dict[int, dict[int, int]]


def start_anchored_table(L: Labelling, X, start: int | None = None) -> StartAnchoredTable:
    """Exact-vertex-set value sets of simple paths starting at ``start``.

    ``start`` defaults to the smallest vertex of the scope.  Retention is
    capped like reach_table.
    """
    mask = _as_mask(X)
    k = mask.bit_count()
    if k > TABLE_RETENTION_CAP:
        raise TooLarge(f"full-table retention capped at {TABLE_RETENTION_CAP} vertices")
    verts = subset_elements(mask)
    if start is None:
        start = verts[0]
    if not (mask >> start) & 1:
        raise NotInScope(f"vertex {start} not in the scope")
    rows = L.rows()
    pres = L.present_rows()
    smul = L.group.subset_mul_elem
    table: dict[int, dict[int, int]] = {1 << start: {start: 1}}
    frontier = [1 << start]
    for _ in range(k - 1):
        grown = set()
        for m in frontier:
            for e, bits in table[m].items():
                row_e = rows[e]
                pres_e = pres[e]
                for w in verts:
                    if not (m >> w) & 1 and pres_e[w]:
                        value = smul(bits, row_e[w])
                        nm = m | (1 << w)
                        nentry = table.setdefault(nm, {})
                        nentry[w] = nentry.get(w, 0) | value
                        grown.add(nm)
        frontier = sorted(grown)
    return StartAnchoredTable(L, mask, start, table)


def reach_table(L: Labelling, X) -> ReachTable:
    """Build the full exact-vertex-set table for the scope.

    Retention is capped at 20 vertices (the aggregated per-layer routines
    above stream instead and go up to 24).
    """
    mask = _as_mask(X)
    k = mask.bit_count()
    if k > TABLE_RETENTION_CAP:
        raise TooLarge(
            f"full-table retention capped at {TABLE_RETENTION_CAP} vertices; "
            "use reach_set / reach_set_between for streamed aggregation")
    verts = subset_elements(mask)
    rows = L.rows()
    pres = L.present_rows()
    smul = L.group.subset_mul_elem
    table: dict[int, dict[int, int]] = {1 << v: {v: 1} for v in verts}
    for size in range(2, k + 1):
        for combo in combinations(verts, size):
            m = sum(1 << v for v in combo)
            entry: dict[int, int] = {}
            for e in combo:
                sub = table.get(m ^ (1 << e))
                if not sub:
                    continue
                acc = 0
                for p, pbits in sub.items():
                    if pres[p][e]:
                        acc |= smul(pbits, rows[p][e])
                if acc:
                    entry[e] = acc
            if entry:
                table[m] = entry
    return ReachTable(L, mask, table)


# -- path reconstruction -------------------------------------------------------

def find_path_with_value(L: Labelling, X, u: int, v: int, value: int) -> list[int]:
    """Some simple u-to-v path inside X whose label product equals ``value``.

    Memoized top-down feasibility over (vertices-allowed mask, endpoint),
    so only the part of the DP reachable from the query is materialized.
    Raises ValueError when no such path exists.
    """
    mask = _as_mask(X)
    for w in (u, v):
        if not (mask >> w) & 1:
            raise NotInScope(f"vertex {w} not in the scope")
    rows = L.rows()
    pres = L.present_rows()
    G = L.group
    smul = G.subset_mul_elem
    inv = G._inv
    mul_rows = G._rows
    memo: dict[tuple[int, int], int] = {}

    def attainable(m: int, e: int) -> int:
        """Values of u-to-e paths with vertices inside m."""
        if e == u:
            return 1
        key = (m, e)
        got = memo.get(key)
        if got is None:
            got = 0
            sub = m ^ (1 << e)
            for p in subset_elements(sub):
                if pres[p][e]:
                    feas = attainable(sub, p)
                    if feas:
                        got |= smul(feas, rows[p][e])
            memo[key] = got
        return got

    if not (attainable(mask, v) >> value) & 1:
        raise ValueError(f"no path from {u} to {v} with value {value} inside the scope")
    path = [v]
    m, e, val = mask, v, value
    while e != u:
        sub = m ^ (1 << e)
        for p in subset_elements(sub):
            if pres[p][e]:
                prev_val = mul_rows[val][inv[rows[p][e]]]
                if (attainable(sub, p) >> prev_val) & 1:
                    path.append(p)
                    m, e, val = sub, p, prev_val
                    break
        else:  # pragma: no cover - contradicts attainable()
            raise AssertionError("reconstruction lost a feasible prefix")
    path.reverse()
    return path


# -- balanced-cycle search -------------------------------------------------------

def short_cycle_scan(L: Labelling, max_len: int = 3) -> CycleWitness | None:
    """O(n^3) scan of 2- and 3-cycles; a miss is inconclusive.

    This is the heuristic mode: it works at any vertex count and is the
    fast path of the exact search.  Over a group of order q a random
    instance has about n(n-1)/(2q) balanced 2-cycles, so at harness scale
    a miss is vanishingly rare.
    """
    rows = L.rows()
    pres = L.present_rows()
    mul = L.group._rows
    n = L.n
    for u in range(n):
        row_u, pres_u = rows[u], pres[u]
        for v in range(u + 1, n):
            if pres_u[v] and pres[v][u] and mul[row_u[v]][rows[v][u]] == 0:
                return CycleWitness((u, v))
    if max_len >= 3:
        for u in range(n):
            for v in range(u + 1, n):
                if not pres[u][v]:
                    continue
                uv = rows[u][v]
                pres_v, rows_v = pres[v], rows[v]
                for w in range(u + 1, n):
                    if w != v and pres_v[w] and pres[w][u] \
                            and mul[mul[uv][rows_v[w]]][rows[w][u]] == 0:
                        return CycleWitness((u, v, w))
    return None


def _checked(L: Labelling, verts: tuple[int, ...]) -> CycleWitness:
    witness = CycleWitness(verts)
    if cycle_value(L, witness) != 0:
        raise AssertionError(f"internal: produced an unbalanced witness {verts}")
    return witness


def find_balanced_cycle(L: Labelling, max_vertices: int = EXACT_CAP) -> CycleWitness | None:
    """Exact search: a validated balanced cycle iff one exists, else None.

    Strategy: short-cycle scan first, then a start-anchored subset-DP sweep
    per minimum vertex, streamed one popcount layer at a time.  Witnesses
    are re-evaluated before being returned.
    """
    n = L.n
    if n > max_vertices:
        raise TooLarge(f"exact search capped at {max_vertices} vertices; "
                       "use short_cycle_scan for a heuristic verdict")
    hit = short_cycle_scan(L)
    if hit is not None:
        return _checked(L, hit.vertices)
    rows = L.rows()
    pres = L.present_rows()
    G = L.group
    smul = G.subset_mul_elem
    inv = G._inv
    for s in range(n):
        others = [v for v in range(s + 1, n)]
        layer = {1 << s: {s: 1}}
        for _ in range(len(others)):
            nxt: dict[int, dict[int, int]] = {}
            for m, entry in layer.items():
                for e, bits in entry.items():
                    row_e = rows[e]
                    pres_e = pres[e]
                    for w in others:
                        if not (m >> w) & 1 and pres_e[w]:
                            value = smul(bits, row_e[w])
                            nentry = nxt.setdefault(m | (1 << w), {})
                            nentry[w] = nentry.get(w, 0) | value
            for m in sorted(nxt):
                entry = nxt[m]
                for e in sorted(entry):
                    if pres[e][s]:
                        target = inv[rows[e][s]]
                        if (entry[e] >> target) & 1:
                            path = find_path_with_value(L, m, s, e, target)
                            return _checked(L, tuple(path))
            layer = nxt
    return None


def enumerate_balanced_cycles(L: Labelling) -> list[CycleWitness]:
    """Every balanced cycle exactly once, canonical rotation, sorted.

    Each cycle is reported with its minimum vertex first (direction
    preserved: reversal is a different cycle), sorted by length then
    lexicographically.  Output size can be exponential, hence the cap.
    """
    n = L.n
    if n > ENUMERATION_CAP:
        raise TooLarge(f"enumeration capped at {ENUMERATION_CAP} vertices")
    rows = L.rows()
    pres = L.present_rows()
    G = L.group
    inv = G._inv
    mul_rows = G._rows
    out: list[CycleWitness] = []

    def expand(table, s, m, e, value):
        """All exact-vertex-set paths s->e realizing value, earliest branch first."""
        if m == 1 << s:
            yield [s]
            return
        sub = m ^ (1 << e)
        sub_entry = table.get(sub, {})
        for p in subset_elements(sub):
            if pres[p][e]:
                prev_val = mul_rows[value][inv[rows[p][e]]]
                if (sub_entry.get(p, 0) >> prev_val) & 1:
                    for prefix in expand(table, s, sub, p, prev_val):
                        prefix.append(e)
                        yield prefix

    for s in range(n):
        table = start_anchored_table(L, range(s, n), start=s).table
        for m in sorted(table):
            for e in sorted(table[m]):
                if e != s and pres[e][s]:
                    target = inv[rows[e][s]]
                    if (table[m][e] >> target) & 1:
                        for path in expand(table, s, m, e, target):
                            out.append(_checked(L, tuple(path)))
    out.sort(key=lambda w: (len(w.vertices), w.vertices))
    return out


@lru_cache(maxsize=None)
def all_simple_cycles(n: int) -> tuple[tuple[int, ...], ...]:
    """Every directed simple cycle of the complete digraph on 0..n-1.

    Canonical rotation (minimum vertex first), ordered by length then
    lexicographically.  Counts grow factorially, so this is only for the
    tiny instances the exhaustive harness enumerates.
    """
    if n > 9:
        raise TooLarge("cycle lists are only kept for n <= 9")
    out = []
    for s in range(n):
        pool = list(range(s + 1, n))
        for extra in range(1, len(pool) + 1):
            for perm in permutations(pool, extra):
                out.append((s,) + perm)
    out.sort(key=lambda c: (len(c), c))
    return tuple(out)
