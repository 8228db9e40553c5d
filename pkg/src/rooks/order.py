"""The Bruhat-Chevalley-Renner order, by two independent routes, and poset
construction.

Route one is the one-line criterion: x <= y iff for every i in 1..n the
decreasing rearrangement of the length-i prefix of x (zeros included) is
dominated entrywise by that of y.  Route two goes through the standard
factorization x = a e b^{-1} with e a cross-section idempotent and (a, b)
unique minimal coset representatives, comparing via an exhaustive witness
search.  The two routes are validated against each other exhaustively in the
tests; neither is ever substituted for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .parallel import chunk_map
from .rook import (
    Rook,
    check_rook,
    multiply,
    rank,
    transpose,
)
from .symplectic import is_symplectic_rook
from .weyl import (
    SYMMETRIC,
    GroupContext,
    cross_section_chain,
    group_context,
    min_coset_reps,
    parabolic_data,
)

COMPARATORS = ("one-line", "ppr")


def _prefix_profile(x: Rook) -> tuple[tuple[int, ...], ...]:
    """Decreasing rearrangements of all prefixes, zeros kept as values."""
    return tuple(
        tuple(sorted(x[:i], reverse=True)) for i in range(1, len(x) + 1)
    )


def _profile_le(p, q) -> bool:
    return all(
        all(a <= b for a, b in zip(pi, qi)) for pi, qi in zip(p, q)
    )


def ehresmann_le(u: Rook, v: Rook) -> bool:
    """Classical Bruhat-Chevalley dominance for permutations."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    n = len(u)
    for i in range(1, n):
        us = sorted(u[:i], reverse=True)
        vs = sorted(v[:i], reverse=True)
        if any(a > b for a, b in zip(us, vs)):
            return False
    return True


def bcr_le(x: Rook, y: Rook) -> bool:
    """The one-line criterion, extended to singular rooks by comparing
    prefix multisets (zeros retained) for every i in 1..n.

    The final prefix i = n is not redundant here: (0,0,0,2) and (0,0,1,0)
    separate only at i = 4.
    """
    if len(x) != len(y):
        raise ValueError(f"size mismatch: {len(x)} vs {len(y)}")
    return _profile_le(_prefix_profile(x), _prefix_profile(y))


@lru_cache(maxsize=None)
def _dominance(u: Rook, v: Rook) -> bool:
    return ehresmann_le(u, v)


@dataclass(frozen=True)
class StandardForm:
    """The unique factorization x = a e b^{-1} with e the cross-section
    idempotent of equal rank, a and b minimal coset representatives."""

    a: Rook
    e: Rook
    b: Rook


def _in_monoid(x: Rook, ctx: GroupContext) -> bool:
    if len(x) != ctx.n:
        return False
    if ctx.kind == SYMMETRIC:
        return True
    return is_symplectic_rook(x)


@lru_cache(maxsize=None)
def _chain_idempotent(kind: str, n: int, r: int) -> Rook:
    for e in cross_section_chain(kind, n):
        if rank(e) == r:
            return e
    raise ValueError(f"no cross-section idempotent of rank {r} for {kind} size {n}")


@lru_cache(maxsize=None)
def _coset_data(kind: str, n: int, e: Rook):
    """(D_*(e), D(e)) for a chain idempotent."""
    ctx = group_context(kind, n)
    data = parabolic_data(e, ctx)
    d_star = min_coset_reps(data.stabilizer_generators, ctx)
    d = min_coset_reps(data.commuting_generators, ctx)
    return d_star, d


@lru_cache(maxsize=None)
def _standard_form_cached(kind: str, n: int, x: Rook) -> StandardForm:
    e = _chain_idempotent(kind, n, rank(x))
    d_star, d = _coset_data(kind, n, e)
    matches = [
        (a, b)
        for a in d_star
        for b in d
        if multiply(multiply(a, e), transpose(b)) == x
    ]
    if len(matches) != 1:
        raise RuntimeError(
            f"standard form of {x} is not unique: {len(matches)} candidates"
        )
    a, b = matches[0]
    return StandardForm(a, e, b)


def standard_form(x: Rook, ctx: GroupContext) -> StandardForm:
    """Factor x over the cross-section chain of the context, by exhaustive
    search over the coset representatives, with a uniqueness check."""
    x = check_rook(x, ctx.n)
    if not _in_monoid(x, ctx):
        raise ValueError(f"{x} is not in the {ctx.kind} monoid of size {ctx.n}")
    return _standard_form_cached(ctx.kind, ctx.n, x)


@lru_cache(maxsize=None)
def _witness_set(kind: str, n: int, f: Rook, e: Rook) -> tuple[Rook, ...]:
    """The product set W(f) W(e) of the two centralizers."""
    ctx = group_context(kind, n)
    zf = parabolic_data(f, ctx).centralizer
    ze = parabolic_data(e, ctx).centralizer
    return tuple(sorted({multiply(u, v) for u in zf for v in ze}))


def bcr_le_ppr(x: Rook, y: Rook, ctx: GroupContext) -> bool:
    """The standard-form criterion: with x = a e b^{-1} and y = c f d^{-1},
    x <= y iff e <= f on the chain and some witness w in W(f)W(e) has
    a <= cw and w^{-1} d^{-1} <= b^{-1} in the Bruhat order.
    """
    sx = standard_form(x, ctx)
    sy = standard_form(y, ctx)
    if rank(sx.e) > rank(sy.e):
        return False
    a, b = sx.a, sx.b
    c, d = sy.a, sy.b
    b_inv = transpose(b)
    d_inv = transpose(d)
    for w in _witness_set(ctx.kind, ctx.n, sy.e, sx.e):
        if _dominance(a, multiply(c, w)) and _dominance(
            multiply(transpose(w), d_inv), b_inv
        ):
            return True
    return False


@dataclass(frozen=True)
class HasseDiagram:
    """A finite poset: elements, covering edges (as index pairs, lower
    first), longest-chain ranks from the minimal elements, and extrema."""

    elements: tuple[Rook, ...]
    covers: tuple[tuple[int, int], ...]
    rank_of: tuple[int, ...]
    minimals: tuple[int, ...]
    maximals: tuple[int, ...]
    graded: bool

    @property
    def height(self) -> int:
        return max(self.rank_of) if self.rank_of else 0


def build_poset(
    elements,
    comparator: str = "one-line",
    ctx: Optional[GroupContext] = None,
    workers: Optional[int] = None,
) -> HasseDiagram:
    """Compare all pairs, reduce transitively, and grade by longest chains.

    The comparability matrix is computed row by row (optionally across
    workers); everything downstream is a deterministic function of it.
    """
    elems = [tuple(x) for x in elements]
    m = len(elems)
    if len(set(elems)) != m:
        raise ValueError("duplicate elements")
    if m and len({len(x) for x in elems}) != 1:
        raise ValueError("elements must share one size")
    if comparator == "one-line":
        profiles = [_prefix_profile(x) for x in elems]

        def less(i: int, j: int) -> bool:
            return i != j and _profile_le(profiles[i], profiles[j])

    elif comparator == "ppr":
        if ctx is None:
            raise ValueError("the ppr comparator needs a group context")

        def less(i: int, j: int) -> bool:
            return i != j and bcr_le_ppr(elems[i], elems[j], ctx)

    else:
        raise ValueError(f"unknown comparator {comparator!r}; choose from {COMPARATORS}")

    def up_row(i: int) -> int:
        mask = 0
        for j in range(m):
            if less(i, j):
                mask |= 1 << j
        return mask

    up = chunk_map(up_row, range(m), workers)
    down = [0] * m
    for i in range(m):
        mask = up[i]
        while mask:
            low = mask & -mask
            down[low.bit_length() - 1] |= 1 << i
            mask ^= low

    covers = []
    for i in range(m):
        mask = up[i]
        while mask:
            low = mask & -mask
            j = low.bit_length() - 1
            mask ^= low
            if not (up[i] & down[j]):
                covers.append((i, j))

    rank_of = [0] * m
    pending = sorted(range(m), key=lambda i: bin(down[i]).count("1"))
    parents: dict[int, list[int]] = {j: [] for j in range(m)}
    for i, j in covers:
        parents[j].append(i)
    for j in pending:
        if parents[j]:
            rank_of[j] = max(rank_of[i] + 1 for i in parents[j])

    minimals = sorted((i for i in range(m) if not down[i]), key=lambda i: elems[i])
    maximals = sorted((i for i in range(m) if not up[i]), key=lambda i: elems[i])
    graded = all(rank_of[j] == rank_of[i] + 1 for i, j in covers)
    covers.sort(key=lambda ij: (elems[ij[0]], elems[ij[1]]))
    return HasseDiagram(
        tuple(elems),
        tuple(covers),
        tuple(rank_of),
        tuple(minimals),
        tuple(maximals),
        graded,
    )
