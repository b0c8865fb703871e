"""Labelled digraphs: evaluation, shifting, inversion, normal forms."""

import random

import numpy as np
import pytest

from balanced_cycles import (AsymmetricMask, CycleWitness, IncompleteDigraph,
                             Labelling, Mismatch, MissingArc,
                             apply_shift_family, cycle_value, cyclic_group,
                             enumerate_balanced_cycles, extremal_cyclic, invert,
                             labelling_from_json, normalize, path_value,
                             random_labelling, shift, shifting_equivalent,
                             to_dot)


def random_shift_family(rng, order, n):
    return tuple(rng.randrange(order) for _ in range(n))


def test_path_value_examples():
    L = extremal_cyclic(3, 3)
    assert path_value(L, [1]) == 0
    assert path_value(L, [0, 1, 2]) == 2
    g5 = cyclic_group(5)
    L5 = Labelling(g5, [[0, 2, 0], [0, 0, 4], [0, 0, 0]])
    assert path_value(L5, [0, 1, 2]) == 1


def test_path_value_missing_arc():
    g3 = cyclic_group(3)
    present = [[False, True], [False, False]]
    L = Labelling(g3, [[0, 1], [2, 0]], present)
    assert path_value(L, [0, 1]) == 1
    with pytest.raises(MissingArc):
        path_value(L, [1, 0])


def test_path_rejects_bad_vertices():
    L = extremal_cyclic(3, 3)
    with pytest.raises(ValueError):
        path_value(L, [0, 0, 1])
    with pytest.raises(ValueError):
        path_value(L, [-1, 0])
    with pytest.raises(ValueError):
        cycle_value(L, [0, 3])


def test_cycle_value_examples():
    g3 = cyclic_group(3)
    Lid = Labelling(g3, [[0] * 3] * 3)
    assert cycle_value(Lid, [0, 1, 2]) == 0
    L = extremal_cyclic(3, 4)
    assert cycle_value(L, [0, 1, 2, 3]) == 0
    assert cycle_value(L, [0, 1, 2]) == 2


def test_cycle_value_start_conjugacy():
    rng = random.Random(5)
    f21_like = random_labelling(cyclic_group(7), 5, 99)
    for _ in range(50):
        verts = tuple(rng.sample(range(5), rng.randint(2, 5)))
        base = cycle_value(f21_like, verts, 0)
        for k in range(len(verts)):
            v = cycle_value(f21_like, verts, k)
            assert (v == 0) == (base == 0)
            # values at different starts are conjugate: prefix c satisfies v = c^-1 base c
            g = f21_like.group
            c = path_value(f21_like, verts[: k + 1])
            assert v == g.mul(g.mul(g.inv(c), base), c)


def test_two_cycle_conjugacy():
    g5 = cyclic_group(5)
    L = Labelling(g5, [[0, 2, 0], [4, 0, 0], [0, 0, 0]])
    assert cycle_value(L, [0, 1], 0) == g5.mul(2, 4)
    assert cycle_value(L, [0, 1], 1) == g5.mul(4, 2)


def test_shift_rule():
    g5 = cyclic_group(5)
    L = random_labelling(g5, 4, 3)
    assert shift(L, 2, 0) == L
    shifted = shift(L, 2, 2)
    for u in range(4):
        for v in range(4):
            if u == v:
                continue
            if v == 2:
                assert shifted.label(u, v) == (L.label(u, v) - 2) % 5
            elif u == 2:
                assert shifted.label(u, v) == (2 + L.label(u, v)) % 5
            else:
                assert shifted.label(u, v) == L.label(u, v)


def test_shift_commutation():
    rng = random.Random(1)
    g = cyclic_group(7)
    for _ in range(25):
        L = random_labelling(g, 5, rng.getrandbits(32))
        v, w = rng.sample(range(5), 2)
        gv, gw = rng.randrange(7), rng.randrange(7)
        assert shift(shift(L, v, gv), w, gw) == shift(shift(L, w, gw), v, gv)


def test_shift_family_matches_sequential_shifts():
    rng = random.Random(2)
    g = cyclic_group(5)
    for _ in range(25):
        L = random_labelling(g, 4, rng.getrandbits(32))
        fam = random_shift_family(rng, 5, 4)
        via_family = apply_shift_family(L, fam)
        via_shifts = L
        for v, gv in enumerate(fam):
            via_shifts = shift(via_shifts, v, gv)
        assert via_family == via_shifts


def test_shifts_preserve_balanced_cycle_set():
    rng = random.Random(3)
    g5 = cyclic_group(5)
    for _ in range(100):
        n = rng.randint(2, 5)
        L = random_labelling(g5, n, rng.getrandbits(32))
        before = [c.vertices for c in enumerate_balanced_cycles(L)]
        shifted = L
        for _ in range(rng.randint(1, 4)):
            shifted = shift(shifted, rng.randrange(n), rng.randrange(5))
        after = [c.vertices for c in enumerate_balanced_cycles(shifted)]
        assert before == after


def test_invert_involution_and_example():
    g5 = cyclic_group(5)
    rng = random.Random(4)
    L = random_labelling(g5, 5, 17)
    assert invert(invert(L)) == L
    inv_L = invert(L)
    for u in range(5):
        for v in range(5):
            if u != v:
                assert inv_L.label(u, v) == (-L.label(v, u)) % 5
    # balanced-cycle existence is preserved (witnesses reverse)
    for _ in range(50):
        n = rng.randint(2, 5)
        M = random_labelling(g5, n, rng.getrandbits(32))
        assert bool(enumerate_balanced_cycles(M)) == bool(enumerate_balanced_cycles(invert(M)))


def test_invert_needs_symmetric_mask():
    g3 = cyclic_group(3)
    present = [[False, True], [False, False]]
    L = Labelling(g3, [[0, 1], [0, 0]], present)
    with pytest.raises(AsymmetricMask):
        invert(L)


def test_normalize():
    L = extremal_cyclic(3, 4)
    norm = normalize(L, 0)
    assert all(norm.label(0, w) == 0 for w in range(1, 4))
    # abelian cancellation: labels strictly inside {1,2,3} survive
    for u in range(1, 4):
        for v in range(1, 4):
            if u != v:
                assert norm.label(u, v) == L.label(u, v)
    assert normalize(norm, 0) == norm  # idempotent at the same base
    rng = random.Random(6)
    for _ in range(20):
        M = random_labelling(cyclic_group(5), 5, rng.getrandbits(32))
        v0 = rng.randrange(5)
        normed = normalize(M, v0)
        assert all(normed.label(v0, w) == 0 for w in range(5) if w != v0)
        assert shifting_equivalent(M, normed) is not None


def test_normalize_rejects_masked():
    g3 = cyclic_group(3)
    present = np.ones((3, 3), dtype=bool)
    present[0, 1] = False
    present[1, 0] = False
    L = Labelling(g3, [[0] * 3] * 3, present)
    with pytest.raises(IncompleteDigraph):
        normalize(L, 0)


def test_shifting_equivalent():
    rng = random.Random(8)
    g5 = cyclic_group(5)
    L = random_labelling(g5, 4, 23)
    fam = shifting_equivalent(L, shift(L, 2, 3))
    assert fam is not None
    assert apply_shift_family(L, fam) == shift(L, 2, 3)
    # all-identity labellings are equivalent via the identity family
    g3 = cyclic_group(3)
    Lid = Labelling(g3, [[0] * 3] * 3)
    assert shifting_equivalent(Lid, Lid) is not None
    # different balanced-cycle sets: never equivalent
    assert shifting_equivalent(extremal_cyclic(3, 3), Lid) is None
    with pytest.raises(Mismatch):
        shifting_equivalent(Lid, random_labelling(g5, 3, 1))
    with pytest.raises(Mismatch):
        shifting_equivalent(Lid, random_labelling(g3, 4, 1))


def test_shifting_equivalence_invariant_under_inversion():
    rng = random.Random(9)
    g5 = cyclic_group(5)
    for _ in range(40):
        L1 = random_labelling(g5, 4, rng.getrandbits(32))
        if rng.random() < 0.5:
            L2 = apply_shift_family(L1, random_shift_family(rng, 5, 4))
        else:
            L2 = random_labelling(g5, 4, rng.getrandbits(32))
        direct = shifting_equivalent(L1, L2) is not None
        inverted = shifting_equivalent(invert(L1), invert(L2)) is not None
        assert direct == inverted


def test_labelling_json_round_trip():
    L = random_labelling(cyclic_group(7), 5, 55)
    assert labelling_from_json(L.to_json()) == L
    masked = Labelling(L.group, L.labels, ~np.eye(5, dtype=bool) & (np.arange(25).reshape(5, 5) % 3 != 0))
    obj = masked.to_json()
    assert "mask" in obj
    assert labelling_from_json(obj) == masked


def test_dot_golden():
    g3 = cyclic_group(3)
    L = Labelling(g3, [[0, 1, 2], [0, 0, 1], [2, 0, 0]])
    witness = CycleWitness((0, 1))
    expected = (
        "digraph labelling {\n"
        "  0;\n"
        "  1;\n"
        "  2;\n"
        '  0 -> 1 [label="1", color=red];\n'
        '  0 -> 2 [label="2"];\n'
        '  1 -> 0 [label="0", color=red];\n'
        '  1 -> 2 [label="1"];\n'
        '  2 -> 0 [label="2"];\n'
        '  2 -> 1 [label="0"];\n'
        "}\n"
    )
    assert to_dot(L, witness) == expected
