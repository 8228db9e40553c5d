"""Folding operators on rook matrices and their preimages.

Folding halves a matrix by reflecting one half onto the other.  With h the
number of row pairs, the top-to-bottom fold sends a cell in row r to row
r - h when r > h, and to row h + 1 - r otherwise (the top half is flipped
onto the bottom half's index range); the left-to-right fold acts the same
way on columns.  The tests pin both conventions down cell-exactly on
8x8 worked examples.

Folding is only defined when no two cells land on the same row or column,
i.e. when the occupied rows (for TB) or columns (for LR) form an admissible
set; anything else raises instead of merging silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .rook import Rook, cells, is_permutation
from .symplectic import FamilySpec, enum_family
from .counting import preimage_weight

DIRECTIONS = ("tb", "lr", "both")


@dataclass(frozen=True)
class PartialMatrix:
    """A rectangular 0/1 matrix with at most one cell per row and column."""

    rows: int
    cols: int
    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.cells))
        object.__setattr__(self, "cells", ordered)
        seen_rows = set()
        seen_cols = set()
        for r, c in ordered:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise ValueError(f"cell ({r},{c}) outside {self.rows}x{self.cols}")
            if r in seen_rows or c in seen_cols:
                raise ValueError(f"two cells share a line at ({r},{c})")
            seen_rows.add(r)
            seen_cols.add(c)

    def text(self) -> str:
        body = " ".join(f"{r},{c}" for r, c in self.cells)
        head = f"{self.rows} {self.cols};"
        return f"{head} {body}" if body else head

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "cells": [list(cell) for cell in self.cells],
        }


def from_rook(x: Rook) -> PartialMatrix:
    n = len(x)
    return PartialMatrix(n, n, cells(x))


def to_rook(pm: PartialMatrix) -> Rook:
    if pm.rows != pm.cols:
        raise ValueError("only square partial matrices convert to rooks")
    out = [0] * pm.cols
    for r, c in pm.cells:
        out[c - 1] = r
    return tuple(out)


def _fold_index(i: int, half: int) -> int:
    return i - half if i > half else half + 1 - i


def fold_tb(pm: PartialMatrix) -> PartialMatrix:
    """Fold the top half onto the bottom half's index range."""
    if pm.rows % 2:
        raise ValueError(f"cannot fold {pm.rows} rows in half")
    h = pm.rows // 2
    occupied = {r for r, _ in pm.cells}
    for r in occupied:
        if r <= h and pm.rows + 1 - r in occupied:
            raise ValueError(
                f"rows {r} and {pm.rows + 1 - r} collide under folding"
            )
    return PartialMatrix(h, pm.cols, tuple((_fold_index(r, h), c) for r, c in pm.cells))


def fold_lr(pm: PartialMatrix) -> PartialMatrix:
    """Fold the left half onto the right half's index range."""
    if pm.cols % 2:
        raise ValueError(f"cannot fold {pm.cols} columns in half")
    w = pm.cols // 2
    occupied = {c for _, c in pm.cells}
    for c in occupied:
        if c <= w and pm.cols + 1 - c in occupied:
            raise ValueError(
                f"columns {c} and {pm.cols + 1 - c} collide under folding"
            )
    return PartialMatrix(pm.rows, w, tuple((r, _fold_index(c, w)) for r, c in pm.cells))


def fold(x, direction: str = "both"):
    """Apply a folding operator.

    Accepts a rook (square tuple) or a PartialMatrix.  Directions "tb" and
    "lr" return a PartialMatrix; "both" needs a square input of even size
    and returns a rook of half the size.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}; choose from {DIRECTIONS}")
    pm = x if isinstance(x, PartialMatrix) else from_rook(tuple(x))
    if direction == "tb":
        return fold_tb(pm)
    if direction == "lr":
        return fold_lr(pm)
    if pm.rows != pm.cols:
        raise ValueError("the full fold needs a square matrix")
    return to_rook(fold_lr(fold_tb(pm)))


def _candidate_cells(r: int, c: int, l: int) -> list[tuple[int, int]]:
    """The unfolded positions of a cell of the half-size matrix that keep
    the result upper triangular."""
    options = [
        (l + 1 - r, l + 1 - c),
        (l + 1 - r, c + l),
        (r + l, l + 1 - c),
        (r + l, c + l),
    ]
    return [cell for cell in options if cell[0] <= cell[1]]


def unfold_preimages_constructive(a: Rook) -> list[Rook]:
    """Unfold by direct construction: every cell of the input chooses one
    of its reflected positions independently, subject to upper
    triangularity.  Used as the proof-style second route."""
    l = len(a)
    n = 2 * l
    per_cell = [_candidate_cells(r, c, l) for r, c in cells(a)]
    out = []
    for choice in product(*per_cell):
        x = [0] * n
        for r, c in choice:
            x[c - 1] = r
        out.append(tuple(x))
    return sorted(out)


def unfold_preimages(a: Rook, workers=None) -> list[Rook]:
    """All upper-triangular symplectic rooks of doubled size folding onto
    the given rook, by exhaustive filtering."""
    l = len(a)
    out = []
    for x in enum_family(FamilySpec(2 * l, "borel-sp"), workers):
        if is_permutation(x):
            continue  # full-rank elements do not fold (cells collide)
        if fold(x, "both") == a:
            out.append(x)
    return out


def preimage_count(a: Rook) -> int:
    """2^(a+c) 3^b for the triangular ranks of the input; equals the number
    of its preimages under the restricted folding map."""
    return preimage_weight(a)
