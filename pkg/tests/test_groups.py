"""Group construction, validation, and subset algebra."""

import random

import pytest

from balanced_cycles import (BadSpec, NotAGroup, NotASubgroup, build_group,
                             cosets, cyclic_group, grow_set, is_subgroup,
                             metacyclic_group, product_group, stabilizer,
                             subgroup_closure, subset_elements, subset_of,
                             table_group)

# order-5 loop: Latin square with two-sided identity, not associative
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def test_trivial_group():
    g = cyclic_group(1)
    assert g.order == 1
    assert g.table.tolist() == [[0]]


def test_cyclic_products():
    g = cyclic_group(5)
    assert g.mul(2, 4) == 1
    assert g.mul(3, 3) == 1
    assert g.inv(2) == 3
    assert g.inv(0) == 0
    assert cyclic_group(9).inv(3) == 6


def test_identity_law_everywhere(groups):
    for g in groups.values():
        for a in g.elements():
            assert g.mul(0, a) == a == g.mul(a, 0)
            assert g.mul(a, g.inv(a)) == 0 == g.mul(g.inv(a), a)


def test_associativity_by_loop():
    # exhaustive triple loop on a couple of small groups, independent of the
    # vectorized check run at construction time
    for g in (cyclic_group(6), metacyclic_group(3, 2, 2)):
        for a in g.elements():
            for b in g.elements():
                for c in g.elements():
                    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_metacyclic_f21():
    f21 = metacyclic_group(7, 3, 2)
    assert f21.order == 21
    # elements (a, b) encoded as 3a + b
    assert f21.mul(1, 3) == 7      # (0,1)*(1,0) = (2,1)
    assert f21.mul(3, 1) == 4      # (1,0)*(0,1) = (1,1)
    assert not f21.is_abelian()


def test_metacyclic_s3_isomorph():
    s3 = metacyclic_group(3, 2, 2)
    assert s3.order == 6
    assert not s3.is_abelian()


def test_bad_specs():
    with pytest.raises(BadSpec):
        metacyclic_group(7, 3, 3)  # 3^3 = 27 != 1 mod 7
    with pytest.raises(BadSpec):
        cyclic_group(0)
    with pytest.raises(BadSpec):
        cyclic_group(65)
    with pytest.raises(BadSpec):
        build_group({"kind": "nope"})
    with pytest.raises(BadSpec):
        product_group(cyclic_group(9), cyclic_group(9))  # order 81 > 64


def test_not_a_group():
    with pytest.raises(NotAGroup):
        table_group([[0, 1], [1, 1]])  # not a Latin square
    with pytest.raises(NotAGroup):
        table_group([[1, 0], [0, 1]])  # identity not at index 0
    with pytest.raises(NotAGroup):
        table_group(NON_ASSOCIATIVE_LOOP)


def test_group_json_round_trip(groups):
    for g in groups.values():
        rebuilt = build_group(g.spec)
        assert rebuilt == g


def test_table_group_spec():
    g = build_group({"kind": "table", "mul": [[0, 1], [1, 0]]})
    assert g == cyclic_group(2)
    assert g.spec["kind"] == "table"
    assert build_group(g.spec) == g


def test_stabilizer_examples():
    g9 = cyclic_group(9)
    full = g9.full_subset()
    assert stabilizer(g9, full, "left") == full
    assert stabilizer(g9, full, "right") == full
    assert stabilizer(g9, subset_of([4]), "left") == 1  # just the identity
    sub = subset_of([0, 3, 6])
    assert stabilizer(g9, sub, "left") == sub
    assert stabilizer(g9, sub, "right") == sub
    # degenerate input decision: everything stabilizes the empty set
    assert stabilizer(g9, 0, "left") == full
    assert stabilizer(g9, 0, "right") == full


def test_stabilizer_is_subgroup_and_fixes_setwise(groups):
    rng = random.Random(7)
    pool = list(groups.values())
    for _ in range(200):
        g = rng.choice(pool)
        bits = rng.getrandbits(g.order)
        for side in ("left", "right"):
            stab = stabilizer(g, bits, side)
            assert is_subgroup(g, stab)
            for h in subset_elements(stab):
                if side == "left":
                    assert g.elem_mul_subset(h, bits) == bits
                else:
                    assert g.subset_mul_elem(bits, h) == bits


def test_grow_set_examples():
    g9 = cyclic_group(9)
    grown = grow_set(g9, subset_of([0, 3, 6]), 1)
    assert subset_elements(grown) == [0, 1, 3, 4, 6, 7]
    g5 = cyclic_group(5)
    assert subset_elements(grow_set(g5, subset_of([0, 1]), 2)) == [0, 1, 2, 3]
    # identity is always a left stabilizer: no growth promised, and none happens
    s = subset_of([0, 2])
    assert grow_set(g5, s, 0) == s


def test_grow_set_lemma_quick(groups):
    # the full 10^4-trial run lives in the acceptance suite
    rng = random.Random(11)
    pool = list(groups.values())
    for _ in range(500):
        g = rng.choice(pool)
        bits = rng.getrandbits(g.order)
        if not bits:
            continue
        stab_l = stabilizer(g, bits, "left")
        outside = [x for x in g.elements() if not (stab_l >> x) & 1]
        if not outside:
            continue
        x = rng.choice(outside)
        stab_r = stabilizer(g, bits, "right")
        grown = grow_set(g, bits, x)
        assert grown.bit_count() >= bits.bit_count() + stab_r.bit_count()
        assert stab_r & ~stabilizer(g, grown, "right") == 0


def test_subgroup_closure():
    g9 = cyclic_group(9)
    assert subgroup_closure(g9, []) == 1
    assert subset_elements(subgroup_closure(g9, [3])) == [0, 3, 6]
    assert subgroup_closure(g9, [3, 1]) == g9.full_subset()
    f21 = metacyclic_group(7, 3, 2)
    # element 3 encodes (1,0), which generates the Z7 part {(k,0)}
    assert subset_elements(subgroup_closure(f21, [3])) == [0, 3, 6, 9, 12, 15, 18]


def test_cosets():
    g9 = cyclic_group(9)
    assert cosets(g9, g9.full_subset(), "left") == [g9.full_subset()]
    singles = cosets(g9, 1, "right")
    assert [subset_elements(c) for c in singles] == [[k] for k in range(9)]
    blocks = cosets(g9, subset_of([0, 3, 6]), "left")
    assert [subset_elements(c) for c in blocks] == [[0, 3, 6], [1, 4, 7], [2, 5, 8]]
    with pytest.raises(NotASubgroup):
        cosets(g9, subset_of([0, 1]), "left")


def test_cosets_partition(groups):
    rng = random.Random(3)
    for g in groups.values():
        for _ in range(5):
            h = subgroup_closure(g, [rng.randrange(g.order)])
            for side in ("left", "right"):
                blocks = cosets(g, h, side)
                assert len(blocks) == g.order // h.bit_count()
                union = 0
                for b in blocks:
                    assert b.bit_count() == h.bit_count()
                    assert union & b == 0
                    union |= b
                assert union == g.full_subset()
                assert h in blocks
