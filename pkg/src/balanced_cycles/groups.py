"""Finite groups as validated Cayley tables, plus subset algebra on bitmasks.

Group elements are plain ints ``0..order-1`` with the identity fixed at
index 0.  Subsets of a group are ints interpreted as bitmasks (bit ``g`` set
iff element ``g`` belongs to the subset), so the largest supported order
is 64 and a subset always fits a machine word.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import BadSpec, NotAGroup, NotASubgroup

MAX_ORDER = 64


def _validate_table(mul: np.ndarray) -> None:
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise NotAGroup("multiplication table must be square")
    order = mul.shape[0]
    if order == 0:
        raise NotAGroup("a group has at least one element")
    if order > MAX_ORDER:
        raise BadSpec(f"group order {order} exceeds the cap of {MAX_ORDER}")
    if mul.min() < 0 or mul.max() >= order:
        raise NotAGroup("table entries must be element indices")
    ref = np.arange(order)
    if not (np.all(np.sort(mul, axis=1) == ref) and np.all(np.sort(mul, axis=0) == ref[:, None])):
        raise NotAGroup("table is not a Latin square")
    if not (np.array_equal(mul[0], ref) and np.array_equal(mul[:, 0], ref)):
        raise NotAGroup("element 0 is not a two-sided identity")
    # mul[mul[a,b],c] == mul[a,mul[b,c]], all triples at once
    if not np.array_equal(mul[mul, :], mul[:, mul]):
        raise NotAGroup("table is not associative")


class FiniteGroup:
    """Immutable finite group backed by an eagerly validated Cayley table.

    ``table`` and ``inverse_table`` are numpy arrays; scalar arithmetic goes
    through plain nested tuples, which are faster for single lookups.
    Instances are safe to share freely: every operation here is pure.
    """

    __slots__ = ("order", "name", "spec", "table", "inverse_table",
                 "_rows", "_inv", "_left_chunks", "_right_chunks")

    def __init__(self, table, name: str = "", spec: dict | None = None):
        mul = np.array(table, dtype=np.int64)
        _validate_table(mul)
        mul.setflags(write=False)
        self.order = int(mul.shape[0])
        self.table = mul
        inv = np.argmax(mul == 0, axis=1)
        if not np.all(mul[inv, np.arange(self.order)] == 0):
            raise NotAGroup("inverses are not two-sided")  # unreachable after validation
        inv.setflags(write=False)
        self.inverse_table = inv
        self.name = name or f"table{self.order}"
        self.spec = spec if spec is not None else {"kind": "table", "mul": mul.tolist()}
        self._rows = tuple(tuple(int(x) for x in row) for row in mul)
        self._inv = tuple(int(x) for x in inv)
        self._left_chunks: dict[int, list[list[int]]] = {}
        self._right_chunks: dict[int, list[list[int]]] = {}

    identity = 0

    def mul(self, g: int, h: int) -> int:
        return self._rows[g][h]

    def inv(self, g: int) -> int:
        return self._inv[g]

    def elements(self) -> range:
        return range(self.order)

    def full_subset(self) -> int:
        return (1 << self.order) - 1

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def conjugate(self, g: int, h: int) -> int:
        """h * g * h^-1."""
        rows = self._rows
        return rows[rows[h][g]][self._inv[h]]

    # -- permutation actions on subsets, via 8-bit chunk lookup tables --

    def _chunks_right(self, g: int) -> list[list[int]]:
        tabs = self._right_chunks.get(g)
        if tabs is None:
            col = tuple(self._rows[s][g] for s in range(self.order))
            tabs = _perm_chunks(col)
            self._right_chunks[g] = tabs
        return tabs

    def _chunks_left(self, g: int) -> list[list[int]]:
        tabs = self._left_chunks.get(g)
        if tabs is None:
            tabs = _perm_chunks(self._rows[g])
            self._left_chunks[g] = tabs
        return tabs

    def subset_mul_elem(self, bits: int, g: int) -> int:
        """S*g as a bitmask."""
        return _apply_chunks(self._chunks_right(g), bits)

    def elem_mul_subset(self, g: int, bits: int) -> int:
        """g*S as a bitmask."""
        return _apply_chunks(self._chunks_left(g), bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _perm_chunks(perm) -> list[list[int]]:
    """8-bit lookup tables sending a bitmask through ``i -> perm[i]``."""
    n = len(perm)
    out = []
    for base in range(0, n, 8):
        width = min(8, n - base)
        tab = [0] * (1 << width)
        for b in range(1, 1 << width):
            low = b & -b
            tab[b] = tab[b ^ low] | (1 << perm[base + low.bit_length() - 1])
        out.append(tab)
    return out


def _apply_chunks(chunks, bits: int) -> int:
    out = 0
    i = 0
    while bits:
        piece = bits & 0xFF
        if piece:
            out |= chunks[i][piece]
        bits >>= 8
        i += 1
    return out


# -- subsets ----------------------------------------------------------------

def subset_of(elems: Iterable[int]) -> int:
    bits = 0
    for e in elems:
        bits |= 1 << e
    return bits


def subset_elements(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def stabilizer(group: FiniteGroup, bits: int, side: str) -> int:
    """stab_l(S) = {g : g*S = S} or stab_r(S) = {g : S*g = S}.

    Always a subgroup.  The empty set is stabilized by everything, so
    ``stabilizer(G, 0, side) == G`` by convention.
    """
    if side == "left":
        act = group.elem_mul_subset
        result = 0
        for g in range(group.order):
            if act(g, bits) == bits:
                result |= 1 << g
    elif side == "right":
        result = 0
        for g in range(group.order):
            if group.subset_mul_elem(bits, g) == bits:
                result |= 1 << g
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return result


def grow_set(group: FiniteGroup, bits: int, x: int) -> int:
    """{1, x} * S = S | x*S.

    When x is outside stab_l(S) and S is non-empty, the result gains at
    least |stab_r(S)| new elements and keeps every right stabilizer of S.
    """
    return bits | group.elem_mul_subset(x, bits)


def is_subgroup(group: FiniteGroup, bits: int) -> bool:
    if not bits & 1:  # identity
        return False
    for h in subset_elements(bits):
        if group.subset_mul_elem(bits, h) != bits:
            return False
    return True


def subgroup_closure(group: FiniteGroup, gens: Iterable[int]) -> int:
    """Smallest subgroup containing the generators (identity if none)."""
    elems = {0} | set(gens)
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(elems):
                for c in (group.mul(a, b), group.mul(b, a)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
        frontier = nxt
    return subset_of(elems)


def cosets(group: FiniteGroup, subgroup_bits: int, side: str) -> list[int]:
    """Left cosets g*H or right cosets H*g, in order of smallest member."""
    if not is_subgroup(group, subgroup_bits):
        raise NotASubgroup(f"{sorted(subset_elements(subgroup_bits))} is not a subgroup")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    out = []
    seen = 0
    for g in range(group.order):
        if (seen >> g) & 1:
            continue
        if side == "left":
            c = group.elem_mul_subset(g, subgroup_bits)
        else:
            c = group.subset_mul_elem(subgroup_bits, g)
        out.append(c)
        seen |= c
    return out


# -- constructions ----------------------------------------------------------

def cyclic_group(q: int) -> FiniteGroup:
    if q < 1:
        raise BadSpec(f"cyclic group needs q >= 1, got {q}")
    if q > MAX_ORDER:
        raise BadSpec(f"cyclic group order {q} exceeds the cap of {MAX_ORDER}")
    table = [[(a + b) % q for b in range(q)] for a in range(q)]
    return FiniteGroup(table, name=f"Z{q}", spec={"kind": "cyclic", "q": q})


def product_group(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    order = left.order * right.order
    if order > MAX_ORDER:
        raise BadSpec(f"product order {order} exceeds the cap of {MAX_ORDER}")
    m = right.order
    table = [[0] * order for _ in range(order)]
    for a1 in range(left.order):
        for b1 in range(m):
            i = a1 * m + b1
            for a2 in range(left.order):
                for b2 in range(m):
                    table[i][a2 * m + b2] = left.mul(a1, a2) * m + right.mul(b1, b2)
    return FiniteGroup(table, name=f"{left.name}x{right.name}",
                       spec={"kind": "product", "left": left.spec, "right": right.spec})


def metacyclic_group(m: int, n: int, r: int) -> FiniteGroup:
    """Z_m semidirect Z_n with action c -> r^b * c; needs r^n = 1 (mod m).

    Pairs (a, b) are encoded as index a*n + b, so the identity (0, 0) sits
    at index 0.  Products follow (a,b)*(c,d) = (a + r^b * c mod m, b + d mod n).
    """
    if m < 1 or n < 1:
        raise BadSpec("metacyclic parameters must be positive")
    if pow(r, n, m) != 1 % m:
        raise BadSpec(f"metacyclic needs r^n = 1 (mod m); got {r}^{n} != 1 (mod {m})")
    order = m * n
    if order > MAX_ORDER:
        raise BadSpec(f"metacyclic order {order} exceeds the cap of {MAX_ORDER}")
    rpow = [pow(r, b, m) for b in range(n)]
    table = [[0] * order for _ in range(order)]
    for a in range(m):
        for b in range(n):
            i = a * n + b
            for c in range(m):
                for d in range(n):
                    table[i][c * n + d] = ((a + rpow[b] * c) % m) * n + (b + d) % n
    return FiniteGroup(table, name=f"M({m},{n},{r})",
                       spec={"kind": "metacyclic", "m": m, "n": n, "r": r})


def table_group(mul, name: str = "") -> FiniteGroup:
    return FiniteGroup(mul, name=name)


def build_group(spec: dict) -> FiniteGroup:
    """Build a group from its JSON-style recipe.

    Recognized shapes: {"kind": "cyclic", "q": 5},
    {"kind": "product", "left": ..., "right": ...},
    {"kind": "metacyclic", "m": 7, "n": 3, "r": 2},
    {"kind": "table", "mul": [[...]]}.
    """
    if not isinstance(spec, dict):
        raise BadSpec(f"group spec must be a mapping, got {type(spec).__name__}")
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic_group(int(spec["q"]))
    if kind == "product":
        return product_group(build_group(spec["left"]), build_group(spec["right"]))
    if kind == "metacyclic":
        return metacyclic_group(int(spec["m"]), int(spec["n"]), int(spec["r"]))
    if kind == "table":
        return table_group(spec["mul"])
    raise BadSpec(f"unknown group spec kind {kind!r}")


def catalog() -> dict[str, FiniteGroup]:
    """The stock of groups used throughout the test campaigns.

    Covers abelian and non-abelian, odd and even order; F21 is the
    non-abelian group of order 21 and M(3,2,2) is isomorphic to S3.
    """
    groups: dict[str, FiniteGroup] = {}
    for q in (2, 3, 4, 5, 7, 9, 15, 21):
        groups[f"Z{q}"] = cyclic_group(q)
    groups["Z3xZ3"] = product_group(cyclic_group(3), cyclic_group(3))
    groups["Z3xZ9"] = product_group(cyclic_group(3), cyclic_group(9))
    f21 = metacyclic_group(7, 3, 2)
    f21.name = "F21"
    groups["F21"] = f21
    groups["M(3,2,2)"] = metacyclic_group(3, 2, 2)
    return groups
