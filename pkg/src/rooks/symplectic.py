"""Admissible subsets, symplectic rooks, rook families, and the
cross-section lattice.

For even n and the index involution theta(i) = n+1-i, a subset S of
{1, ..., n} is admissible when theta(S) and S are disjoint.  The symplectic
Renner monoid consists of the singular rooks whose domain and range are both
admissible, together with the theta-fixed permutations.

Family enumeration is by backtracking over columns in lexicographic order;
symplectic families are obtained by filtering, which keeps the membership
test and the enumeration independent of the group-orbit description (the
tests compare the two at n = 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .parallel import chunk_map
from .rook import Rook, domain, is_permutation, range_of, rank
from .weyl import SYMPLECTIC, cross_section_chain, theta_perm

DESK_LIMIT = 8

FAMILIES = ("rook", "borel", "borel-nil", "renner-sp", "borel-sp", "borel-sp-nil")
SP_FAMILIES = ("renner-sp", "borel-sp", "borel-sp-nil")
NIL_FAMILIES = ("borel-nil", "borel-sp-nil")


class ResourceLimitError(ValueError):
    """Raised when an enumeration exceeds the supported desk-scale bounds."""


def _check_even(n: int) -> int:
    if n < 2 or n % 2:
        raise ValueError(f"size must be even and positive, got {n}")
    return n


def theta_index(i: int, n: int) -> int:
    return n + 1 - i


def is_admissible(members, n: int) -> bool:
    """True iff no element of the set pairs with another under i -> n+1-i."""
    _check_even(n)
    s = set(members)
    for i in s:
        if not 1 <= i <= n:
            raise ValueError(f"member {i} out of range 1..{n}")
    return all(theta_index(i, n) not in s for i in s)


def enum_admissible(n: int, k: int) -> list[tuple[int, ...]]:
    """All admissible k-subsets of {1, ..., n}, lexicographically sorted."""
    _check_even(n)
    if not 0 <= k <= n:
        raise ValueError(f"k out of range 0..{n}")
    return [s for s in combinations(range(1, n + 1), k) if is_admissible(s, n)]


def is_symplectic_rook(x: Rook) -> bool:
    """Membership in the symplectic Renner monoid: a singular rook with
    admissible domain and range, or a theta-fixed permutation."""
    n = len(x)
    _check_even(n)
    if is_permutation(x):
        return theta_perm(x) == x
    return is_admissible(domain(x), n) and is_admissible(range_of(x), n)


@dataclass(frozen=True)
class FamilySpec:
    """A named enumeration: family, matrix size, optional rank slice."""

    n: int
    family: str
    rank: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise ValueError("size must be positive")
        if self.family in SP_FAMILIES:
            _check_even(self.n)
        if self.rank is not None and not 0 <= self.rank <= self.n:
            raise ValueError(f"rank {self.rank} out of range 0..{self.n}")


def _column_choices(j: int, n: int, used: set[int], family: str) -> list[int]:
    if family in ("borel-nil", "borel-sp-nil"):
        top = j - 1
    elif family in ("borel", "borel-sp"):
        top = j
    else:
        top = n
    return [0] + [v for v in range(1, top + 1) if v not in used]


def _complete(prefix: tuple[int, ...], spec: FamilySpec) -> list[Rook]:
    """All family members extending the given one-line prefix, in
    lexicographic order."""
    n = spec.n
    out: list[Rook] = []
    column = [0] * n
    column[: len(prefix)] = prefix
    used = {v for v in prefix if v}

    def recurse(j: int):
        if j > n:
            x = tuple(column)
            if spec.rank is not None and rank(x) != spec.rank:
                return
            if spec.family in SP_FAMILIES and not is_symplectic_rook(x):
                return
            out.append(x)
            return
        for v in _column_choices(j, n, used, spec.family):
            column[j - 1] = v
            if v:
                used.add(v)
            recurse(j + 1)
            if v:
                used.discard(v)

    recurse(len(prefix) + 1)
    return out


def enum_family(spec: FamilySpec, workers: Optional[int] = None) -> list[Rook]:
    """Deterministic lexicographic list of all members of a family.

    The search space is partitioned on the first column and the chunks are
    merged in order, so the result is identical for every worker count.
    """
    if spec.n > DESK_LIMIT:
        raise ResourceLimitError(
            f"enumeration supports sizes up to {DESK_LIMIT}, got {spec.n}"
        )
    prefixes = [(v,) for v in _column_choices(1, spec.n, set(), spec.family)]
    chunks = chunk_map(lambda p: _complete(p, spec), prefixes, workers)
    result: list[Rook] = []
    for chunk in chunks:
        result.extend(chunk)
    return result


def cross_section_lattice(n: int) -> list[Rook]:
    """The symplectic cross-section chain e_0 < e_1 < ... < e_l < e_n."""
    _check_even(n)
    return list(cross_section_chain(SYMPLECTIC, n))


def rank_slice_minimum(n: int, k: int) -> Rook:
    """(0, ..., 0, 1, 2, ..., k): the unique minimum of the rank-k slice
    of the upper-triangular rooks (symplectic or not)."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    return (0,) * (n - k) + tuple(range(1, k + 1))
