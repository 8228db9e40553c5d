from math import comb

import pytest

from rooks.order import bcr_le
from rooks.rook import identity_rook, multiply, rank, domain, range_of
from rooks.symplectic import (
    FamilySpec,
    ResourceLimitError,
    cross_section_lattice,
    enum_admissible,
    enum_family,
    is_admissible,
    is_symplectic_rook,
    rank_slice_minimum,
)
from rooks.weyl import SYMPLECTIC, group_context, theta_perm


def test_is_admissible_examples():
    assert is_admissible({1, 3}, 4)
    assert not is_admissible({2, 3}, 4)
    assert is_admissible(set(), 4)
    with pytest.raises(ValueError):
        is_admissible({1}, 3)
    with pytest.raises(ValueError):
        is_admissible({5}, 4)


def test_enum_admissible_examples():
    assert enum_admissible(4, 2) == [(1, 2), (1, 3), (2, 4), (3, 4)]
    assert enum_admissible(4, 3) == []
    assert enum_admissible(4, 0) == [()]
    with pytest.raises(ValueError):
        enum_admissible(4, 5)


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5, 6])
def test_admissible_counts(l):
    n = 2 * l
    total = 0
    for k in range(n + 1):
        count = len(enum_admissible(n, k))
        assert count == comb(l, k) * 2**k
        total += count
    assert total == 3**l


def test_is_symplectic_rook_examples():
    assert is_symplectic_rook((0, 0, 2, 1))
    assert not is_symplectic_rook((0, 0, 2, 3))
    assert is_symplectic_rook((1, 2, 3, 4))
    assert not is_symplectic_rook((2, 1, 3, 4))  # not theta-fixed
    with pytest.raises(ValueError):
        is_symplectic_rook((1, 2, 3))


def test_enum_family_counts():
    assert len(enum_family(FamilySpec(2, "rook"))) == 7
    assert len(enum_family(FamilySpec(4, "borel-sp"))) == 25
    assert len(enum_family(FamilySpec(4, "borel-sp-nil"))) == 12
    assert len(enum_family(FamilySpec(4, "renner-sp"))) == 57


def test_enum_family_sorted_and_worker_independent():
    for family in ("rook", "borel", "borel-nil", "renner-sp", "borel-sp"):
        spec = FamilySpec(4, family)
        one = enum_family(spec, workers=1)
        four = enum_family(spec, workers=4)
        assert one == four == sorted(one)


def test_enum_family_rank_filter():
    slice2 = enum_family(FamilySpec(4, "borel-sp", rank=2))
    assert len(slice2) == 13
    assert all(rank(x) == 2 for x in slice2)


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(3, "renner-sp")  # odd size for a symplectic family
    with pytest.raises(ValueError):
        FamilySpec(4, "no-such-family")
    with pytest.raises(ValueError):
        FamilySpec(4, "rook", rank=9)


def test_desk_bound():
    with pytest.raises(ResourceLimitError):
        enum_family(FamilySpec(9, "rook"))


def test_cross_section_lattice():
    assert cross_section_lattice(4) == [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (1, 2, 0, 0),
        (1, 2, 3, 4),
    ]
    assert cross_section_lattice(2) == [(0, 0), (1, 0), (1, 2)]
    with pytest.raises(ValueError):
        cross_section_lattice(3)


def test_borel_sp_equals_lower_interval_of_identity():
    # upper-triangularity coincides with x <= 1 inside the symplectic rooks
    renner = enum_family(FamilySpec(4, "renner-sp"))
    borel = set(enum_family(FamilySpec(4, "borel-sp")))
    ident = identity_rook(4)
    assert {x for x in renner if bcr_le(x, ident)} == borel


@pytest.mark.parametrize("n", [4, 6])
def test_members_have_admissible_domain_and_range(n):
    for x in enum_family(FamilySpec(n, "renner-sp")):
        if rank(x) < n:
            assert is_admissible(domain(x), n)
            assert is_admissible(range_of(x), n)
        else:
            assert theta_perm(x) == x


def test_renner_sp_closed_under_product():
    members = enum_family(FamilySpec(4, "renner-sp"))
    member_set = set(members)
    for x in members:
        for y in members:
            assert multiply(x, y) in member_set


def test_renner_sp_matches_orbit_description():
    # the filtered enumeration equals the union of W_G e W_G over the chain
    n = 4
    ctx = group_context(SYMPLECTIC, n)
    orbit_union = set()
    for e in cross_section_lattice(n):
        for a in ctx.elements:
            for b in ctx.elements:
                orbit_union.add(multiply(multiply(a, e), b))
    assert orbit_union == set(enum_family(FamilySpec(n, "renner-sp")))


def test_rank_slice_minimum():
    assert rank_slice_minimum(4, 2) == (0, 0, 1, 2)
    assert rank_slice_minimum(4, 0) == (0, 0, 0, 0)
    assert is_symplectic_rook(rank_slice_minimum(6, 3))
