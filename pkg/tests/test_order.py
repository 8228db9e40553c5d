from itertools import permutations, product

import pytest

from rooks.order import (
    bcr_le,
    bcr_le_ppr,
    build_poset,
    ehresmann_le,
    standard_form,
)
from rooks.rook import identity_rook, is_upper_triangular, multiply, transpose, zero_rook
from rooks.symplectic import FamilySpec, enum_family, rank_slice_minimum
from rooks.weyl import SYMMETRIC, SYMPLECTIC, group_context


def all_rooks(n):
    return enum_family(FamilySpec(n, "rook"))


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def test_ehresmann_examples():
    assert ehresmann_le((2, 1, 4, 3), (4, 3, 2, 1))
    assert not ehresmann_le((3, 1, 2, 4), (2, 4, 1, 3))
    for v in all_perms(4):
        assert ehresmann_le(identity_rook(4), v)
    with pytest.raises(ValueError):
        ehresmann_le((1, 2), (1, 2, 3))


def test_bcr_examples():
    assert bcr_le((3, 1, 5, 2, 4), (5, 2, 4, 3, 1))
    assert bcr_le((0, 0, 1, 2), (0, 0, 2, 1))
    assert not bcr_le((0, 0, 0, 2), (0, 0, 1, 0))
    assert not bcr_le((0, 0, 1, 0), (0, 0, 0, 2))
    with pytest.raises(ValueError):
        bcr_le((1, 2), (1, 2, 3))


def test_final_prefix_is_decisive():
    # these agree on every prefix of length < n and separate only at i = n
    assert not bcr_le((0, 0, 0, 2), (0, 0, 1, 0))
    x, y = (0, 0, 0, 2), (0, 0, 1, 0)
    for i in range(1, 4):
        xs = sorted(x[:i], reverse=True)
        ys = sorted(y[:i], reverse=True)
        assert all(a <= b for a, b in zip(xs, ys))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bcr_is_partial_order_small(n):
    rooks = all_rooks(n)
    for x in rooks:
        assert bcr_le(x, x)
    for x, y in product(rooks, repeat=2):
        if bcr_le(x, y) and bcr_le(y, x):
            assert x == y
    for x, y, z in product(rooks, repeat=3):
        if bcr_le(x, y) and bcr_le(y, z):
            assert bcr_le(x, z)


def test_bcr_is_partial_order_r4():
    # exhaustive on all 209 elements, with the relation as bitmasks
    rooks = all_rooks(4)
    m = len(rooks)
    up = []
    for x in rooks:
        mask = 0
        for j, y in enumerate(rooks):
            if bcr_le(x, y):
                mask |= 1 << j
        up.append(mask)
    for i in range(m):
        assert up[i] & (1 << i)  # reflexive
        rest = up[i]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if i != j:
                assert not (up[j] & (1 << i))  # antisymmetric
            assert up[j] & ~up[i] == 0  # transitive: up[j] subset of up[i]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bcr_restricts_to_ehresmann_on_permutations(n):
    perms = all_perms(n)
    for u, v in product(perms, repeat=2):
        assert bcr_le(u, v) == ehresmann_le(u, v)


def test_standard_form_examples():
    ctx = group_context(SYMMETRIC, 4)
    form = standard_form((0, 0, 1, 2), ctx)
    assert form.a == (1, 2, 3, 4)
    assert form.e == (1, 2, 0, 0)
    assert form.b == (3, 4, 1, 2)
    ident = identity_rook(4)
    assert standard_form(ident, ctx) == standard_form(ident, ctx)
    assert standard_form(ident, ctx).e == ident
    e2 = (1, 2, 0, 0)
    form = standard_form(e2, ctx)
    assert (form.a, form.e, form.b) == (ident, e2, ident)
    zero = zero_rook(4)
    form = standard_form(zero, ctx)
    assert (form.a, form.e, form.b) == (ident, zero, ident)


def test_standard_form_reconstructs_and_is_unique():
    for kind, family in ((SYMMETRIC, "rook"), (SYMPLECTIC, "renner-sp")):
        ctx = group_context(kind, 4)
        for x in enum_family(FamilySpec(4, family)):
            form = standard_form(x, ctx)
            assert multiply(multiply(form.a, form.e), transpose(form.b)) == x


def test_standard_form_scales_past_the_chain_jump():
    # at n = 6 the cross-section chain runs e_0..e_3 then jumps to e_6
    ctx = group_context(SYMPLECTIC, 6)
    for x in enum_family(FamilySpec(6, "renner-sp")):
        form = standard_form(x, ctx)
        assert multiply(multiply(form.a, form.e), transpose(form.b)) == x


def test_comparators_agree_on_sample_at_n6():
    sp6 = enum_family(FamilySpec(6, "renner-sp"))
    sample = sp6[::13]  # deterministic stratified slice, 59 elements
    ctx = group_context(SYMPLECTIC, 6)
    for x in sample:
        for y in sample:
            assert bcr_le(x, y) == bcr_le_ppr(x, y, ctx)


def test_standard_form_rejects_non_members():
    ctx = group_context(SYMPLECTIC, 4)
    with pytest.raises(ValueError):
        standard_form((0, 0, 2, 3), ctx)  # range not admissible
    with pytest.raises(ValueError):
        standard_form((2, 1, 3, 4), ctx)  # not theta-fixed


def test_ppr_examples():
    ctx = group_context(SYMPLECTIC, 4)
    assert bcr_le_ppr((0, 0, 0, 1), (0, 0, 1, 0), ctx)
    assert bcr_le_ppr((0, 0, 1, 0), (0, 0, 1, 0), ctx)
    assert not bcr_le_ppr((0, 0, 1, 0), (0, 0, 0, 4), ctx)
    assert not bcr_le_ppr((0, 0, 0, 4), (0, 0, 1, 0), ctx)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_comparators_agree_small(n):
    ctx = group_context(SYMMETRIC, n)
    rooks = all_rooks(n)
    for x, y in product(rooks, repeat=2):
        assert bcr_le(x, y) == bcr_le_ppr(x, y, ctx)


def test_weyl_group_order_is_induced():
    # on theta-fixed permutations the intrinsic symplectic order agrees
    # with the ambient one
    ctx = group_context(SYMPLECTIC, 4)
    for u, v in product(ctx.elements, repeat=2):
        assert bcr_le_ppr(u, v, ctx) == ehresmann_le(u, v)


def test_triangularity_iff_a_le_b():
    ctx = group_context(SYMMETRIC, 4)
    for x in all_rooks(4):
        form = standard_form(x, ctx)
        assert is_upper_triangular(x) == ehresmann_le(form.a, form.b)


def test_build_poset_borel_sp_slice():
    poset = build_poset(enum_family(FamilySpec(4, "borel-sp", rank=2)))
    assert [poset.elements[i] for i in poset.minimals] == [rank_slice_minimum(4, 2)]
    maximals = [poset.elements[i] for i in poset.maximals]
    assert maximals == [(0, 0, 3, 4), (0, 2, 0, 4), (1, 0, 3, 0), (1, 2, 0, 0)]
    assert poset.graded


def test_build_poset_singleton_and_errors():
    poset = build_poset([(1, 0)])
    assert len(poset.elements) == 1 and not poset.covers
    assert poset.minimals == poset.maximals == (0,)
    with pytest.raises(ValueError):
        build_poset([(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        build_poset([(1, 0), (1, 0, 0)])
    with pytest.raises(ValueError):
        build_poset([(1, 0)], comparator="nope")
    with pytest.raises(ValueError):
        build_poset([(1, 0)], comparator="ppr")  # missing context


def test_build_poset_covers_are_reduced():
    elements = enum_family(FamilySpec(4, "borel-sp"))
    poset = build_poset(elements)
    less = {
        (i, j)
        for i in range(len(elements))
        for j in range(len(elements))
        if i != j and bcr_le(elements[i], elements[j])
    }
    for i, j in poset.covers:
        assert (i, j) in less
        assert not any(
            (i, k) in less and (k, j) in less for k in range(len(elements))
        )
    # every strict relation is reachable through covers
    reach = {i: {i} for i in range(len(elements))}
    changed = True
    while changed:
        changed = False
        for i, j in poset.covers:
            new = reach[j] - reach[i]
            if new:
                reach[i] |= new
                changed = True
    for i, j in less:
        assert j in reach[i]


def test_build_poset_worker_independence():
    elements = enum_family(FamilySpec(4, "borel-sp"))
    assert build_poset(elements, workers=1) == build_poset(elements, workers=4)
