"""Symmetric groups and the symplectic Weyl group.

Permutations are total rooks: tuples ``(w_1, ..., w_n)`` with every value
1..n present once.  Groups are materialized exhaustively (the symplectic
Weyl group by breadth-first closure over its generators), which is cheap at
desk scale and keeps lengths, cosets, centralizers, and stabilizers exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from .rook import (
    Rook,
    check_rook,
    diagonal_idempotent,
    identity_rook,
    is_permutation,
    multiply,
    rank,
)

Perm = Rook

SYMMETRIC = "symmetric"
SYMPLECTIC = "symplectic"


def check_permutation(w, n=None) -> Perm:
    w = check_rook(w, n)
    if not is_permutation(w):
        raise ValueError(f"{w} is not a total permutation")
    return w


def inversions(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def theta_perm(w: Perm) -> Perm:
    """The involution (n+1-w_n, n+1-w_{n-1}, ..., n+1-w_1); its fixed
    points are exactly the symplectic Weyl group."""
    n = len(w)
    if n % 2:
        raise ValueError(f"size must be even, got {n}")
    return tuple(n + 1 - w[n - 1 - i] for i in range(n))


def simple_transposition(n: int, j: int) -> Perm:
    """r_j = (j, j+1) in one-line notation."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"r_{j} undefined for size {n}")
    w = list(range(1, n + 1))
    w[j - 1], w[j] = w[j], w[j - 1]
    return tuple(w)


def symplectic_generators(l: int) -> list[Perm]:
    """The generators s_1, ..., s_l of the symplectic Weyl group of size
    n = 2l: s_j = r_j r_{n-j} for j < l, and s_l = r_l."""
    if l < 1:
        raise ValueError("l must be positive")
    n = 2 * l
    gens = []
    for j in range(1, l):
        gens.append(multiply(simple_transposition(n, j), simple_transposition(n, n - j)))
    gens.append(simple_transposition(n, l))
    return gens


def _bfs_closure(n: int, gens: tuple[Perm, ...]) -> dict[Perm, int]:
    """All products of the generators, with word-length (Cayley) distance."""
    ident = identity_rook(n)
    dist = {ident: 0}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                u = multiply(w, s)
                if u not in dist:
                    dist[u] = dist[w] + 1
                    new.append(u)
        frontier = new
    return dist


@dataclass(frozen=True)
class GroupContext:
    """A fully materialized Weyl group of one of the two kinds."""

    kind: str
    n: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] = field(compare=False)
    lengths: dict = field(compare=False, repr=False)

    @property
    def key(self):
        return (self.kind, self.n)


@lru_cache(maxsize=None)
def group_context(kind: str, n: int) -> GroupContext:
    if kind == SYMMETRIC:
        if n < 1:
            raise ValueError("size must be positive")
        gens = tuple(simple_transposition(n, j) for j in range(1, n))
        elements = tuple(_itertools_permutations(range(1, n + 1)))
        lengths = {}  # lengths are inversion counts, computed on demand
    elif kind == SYMPLECTIC:
        if n < 2 or n % 2:
            raise ValueError(f"symplectic size must be even and positive, got {n}")
        gens = tuple(symplectic_generators(n // 2))
        lengths = _bfs_closure(n, gens)
        elements = tuple(sorted(lengths))
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    return GroupContext(kind, n, gens, elements, lengths)


def contains(ctx: GroupContext, w: Perm) -> bool:
    if ctx.kind == SYMMETRIC:
        return len(w) == ctx.n and is_permutation(w)
    return w in ctx.lengths


def coxeter_length(w: Perm, ctx: GroupContext) -> int:
    """Minimal word length in the generators: the inversion number for the
    symmetric group, Cayley-graph distance for the symplectic one."""
    if not contains(ctx, w):
        raise ValueError(f"{w} is not in the {ctx.kind} group of size {ctx.n}")
    if ctx.kind == SYMMETRIC:
        return inversions(w)
    return ctx.lengths[w]


def cross_section_chain(kind: str, n: int) -> tuple[Rook, ...]:
    """The chain of diagonal idempotents acting as orbit representatives:
    e_0 < e_1 < ... < e_n for the rook monoid, and e_0 < ... < e_l < e_n
    for the symplectic one (note the index jump)."""
    if kind == SYMMETRIC:
        ks = range(n + 1)
    elif kind == SYMPLECTIC:
        if n % 2:
            raise ValueError(f"size must be even, got {n}")
        ks = list(range(n // 2 + 1)) + [n]
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    return tuple(diagonal_idempotent(n, range(1, k + 1)) for k in ks)


def _subgroup(ctx: GroupContext, gens) -> tuple[Perm, ...]:
    for s in gens:
        if s not in ctx.generators:
            raise ValueError(f"{s} is not a simple generator of the context")
    if not gens:
        return (identity_rook(ctx.n),)
    return tuple(sorted(_bfs_closure(ctx.n, tuple(gens))))


def min_coset_reps(gens, ctx: GroupContext) -> tuple[Perm, ...]:
    """Minimal-length representatives of the left cosets of the parabolic
    subgroup generated by ``gens``; each coset has a unique one.
    """
    subgroup = _subgroup(ctx, tuple(gens))
    assigned = set()
    reps = []
    for x in ctx.elements:
        if x in assigned:
            continue
        coset = sorted(multiply(x, w) for w in subgroup)
        lengths = [coxeter_length(y, ctx) for y in coset]
        best = min(lengths)
        if lengths.count(best) != 1:
            raise RuntimeError(f"coset of {x} has no unique shortest element")
        reps.append(coset[lengths.index(best)])
        assigned.update(coset)
    return tuple(sorted(reps))


@dataclass(frozen=True)
class ParabolicData:
    """Centralizer and stabilizer data of a cross-section idempotent."""

    commuting_generators: tuple[Perm, ...]
    centralizer: tuple[Perm, ...]
    stabilizer_generators: tuple[Perm, ...]
    stabilizer: tuple[Perm, ...]


def _commuting_generators(e: Rook, ctx: GroupContext) -> tuple[Perm, ...]:
    return tuple(s for s in ctx.generators if multiply(s, e) == multiply(e, s))


def parabolic_data(e: Rook, ctx: GroupContext) -> ParabolicData:
    """Exhaustive centralizer {a : ae = ea} and stabilizer
    {a : ae = ea = e} of a chain idempotent.

    The listed stabilizer generators are the intersection of the commuting
    generator sets over all chain idempotents below e; the tests check that
    they do generate the stabilizer.
    """
    chain = cross_section_chain(ctx.kind, ctx.n)
    if e not in chain:
        raise ValueError(f"{e} is not an idempotent of the cross-section chain")
    commuting = _commuting_generators(e, ctx)
    centralizer = tuple(
        a for a in sorted(ctx.elements)
        if multiply(a, e) == multiply(e, a)
    )
    stabilizer = tuple(
        a for a in centralizer if multiply(a, e) == e
    )
    below = [f for f in chain if rank(f) <= rank(e)]
    stab_gens = set(ctx.generators)
    for f in below:
        stab_gens &= set(_commuting_generators(f, ctx))
    ordered_stab_gens = tuple(s for s in ctx.generators if s in stab_gens)
    return ParabolicData(commuting, centralizer, ordered_stab_gens, stabilizer)


def generated_subgroup(gens, ctx: GroupContext) -> tuple[Perm, ...]:
    """The subgroup generated by a subset of the simple generators."""
    return _subgroup(ctx, tuple(gens))
