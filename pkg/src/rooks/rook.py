"""Exact arithmetic on rooks: partial permutation matrices in one-line notation.

A rook of size n is a 0/1 matrix with at most one nonzero entry in each row
and each column.  It is stored as the tuple ``(x_1, ..., x_n)`` where ``x_j``
is the row index of the entry in column j, or 0 when column j is empty.
Plain tuples keep every value hashable and lexicographically comparable,
which the enumeration and poset code relies on for deterministic output.

The same convention is shared by every module in the package: ``x_j`` is a
row index, the column set is the domain and the row set is the range of the
underlying injective partial map, and ``multiply`` is the 0/1 matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Rook = tuple[int, ...]


def check_rook(values: Sequence[int], n: Optional[int] = None) -> Rook:
    """Validate one-line data and return it as a canonical tuple.

    >>> check_rook([3, 0, 4, 0])
    (3, 0, 4, 0)
    """
    x = tuple(int(v) for v in values)
    if n is not None and len(x) != n:
        raise ValueError(f"expected {n} entries, got {len(x)}")
    size = len(x)
    if size == 0:
        raise ValueError("a rook needs positive size")
    for v in x:
        if not 0 <= v <= size:
            raise ValueError(f"entry {v} out of range 0..{size}")
    nonzero = [v for v in x if v]
    if len(set(nonzero)) != len(nonzero):
        raise ValueError("duplicate nonzero entry breaks injectivity")
    return x


def parse_one_line(text: str, n: int) -> Rook:
    """Parse the text form "(x1,x2,...,xn)"; spaces are tolerated."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected a parenthesized list, got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != n:
        raise ValueError(f"expected {n} entries, got {len(parts)}")
    try:
        values = [int(p.strip()) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    return check_rook(values, n)


def format_one_line(x: Rook) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def zero_rook(n: int) -> Rook:
    return (0,) * n


def identity_rook(n: int) -> Rook:
    return tuple(range(1, n + 1))


def domain(x: Rook) -> tuple[int, ...]:
    """Column indices of the nonzero entries, increasing."""
    return tuple(j for j, v in enumerate(x, start=1) if v)


def range_of(x: Rook) -> tuple[int, ...]:
    """Row indices of the nonzero entries, increasing."""
    return tuple(sorted(v for v in x if v))


def rank(x: Rook) -> int:
    return sum(1 for v in x if v)


def cells(x: Rook) -> tuple[tuple[int, int], ...]:
    """Nonzero positions as (row, column) pairs, sorted."""
    return tuple(sorted((v, j) for j, v in enumerate(x, start=1) if v))


def is_permutation(x: Rook) -> bool:
    return 0 not in x


def multiply(x: Rook, y: Rook) -> Rook:
    """The 0/1 matrix product: column j of the result hits row x_{y_j}."""
    if len(x) != len(y):
        raise ValueError(f"size mismatch: {len(x)} vs {len(y)}")
    return tuple(x[v - 1] if v else 0 for v in y)


def transpose(x: Rook) -> Rook:
    """Matrix transpose; the inverse of the underlying partial injection."""
    out = [0] * len(x)
    for j, v in enumerate(x, start=1):
        if v:
            out[v - 1] = j
    return tuple(out)


def power(x: Rook, m: int) -> Rook:
    out = identity_rook(len(x))
    for _ in range(m):
        out = multiply(out, x)
    return out


def is_nilpotent_rook(x: Rook) -> bool:
    """True iff some power of x is zero.

    Decided by cycle detection in the functional graph of the partial map
    j -> x_j, which is O(n); repeated squaring is kept in the tests as an
    independent oracle.
    """
    n = len(x)
    state = [0] * (n + 1)  # 0 unseen, 1 on current path, 2 done
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        j = start
        while j and state[j] == 0:
            state[j] = 1
            path.append(j)
            j = x[j - 1]
        if j and state[j] == 1:
            return False
        for v in path:
            state[v] = 2
    return True


@dataclass(frozen=True)
class TriangularParts:
    """The unique split of a rook into strictly lower, diagonal, and
    strictly upper pieces (entrywise, with pairwise disjoint supports)."""

    lower: Rook
    diag: Rook
    upper: Rook

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (rank(self.lower), rank(self.diag), rank(self.upper))


def triangular_decompose(x: Rook) -> TriangularParts:
    n = len(x)
    lower = [0] * n
    diag = [0] * n
    upper = [0] * n
    for j, v in enumerate(x, start=1):
        if not v:
            continue
        if v > j:
            lower[j - 1] = v
        elif v == j:
            diag[j - 1] = v
        else:
            upper[j - 1] = v
    return TriangularParts(tuple(lower), tuple(diag), tuple(upper))


def triangular_ranks(x: Rook) -> tuple[int, int, int]:
    return triangular_decompose(x).ranks


def diagonal_idempotent(n: int, support) -> Rook:
    """The diagonal 0/1 matrix with ones exactly on the given support."""
    out = [0] * n
    for j in support:
        if not 1 <= j <= n:
            raise ValueError(f"support element {j} out of range 1..{n}")
        out[j - 1] = j
    return tuple(out)


def is_upper_triangular(x: Rook) -> bool:
    """All nonzero cells on or above the main diagonal."""
    return all(v == 0 or v <= j for j, v in enumerate(x, start=1))


def is_strictly_upper_triangular(x: Rook) -> bool:
    return all(v == 0 or v < j for j, v in enumerate(x, start=1))


# --- exact rational matrices and symplectic-monoid membership ---

RationalMatrix = tuple[tuple[Fraction, ...], ...]


def rational_matrix(rows) -> RationalMatrix:
    """Build a square matrix of exact rationals; no floats are accepted."""
    out = []
    for row in rows:
        out.append(tuple(Fraction(v) for v in row))
    n = len(out)
    if n == 0 or any(len(row) != n for row in out):
        raise ValueError("matrix must be square and nonempty")
    return tuple(out)


def rook_matrix(x: Rook) -> RationalMatrix:
    """The 0/1 matrix of a rook, with exact rational entries."""
    n = len(x)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j, v in enumerate(x, start=1):
        if v:
            rows[v - 1][j - 1] = Fraction(1)
    return tuple(tuple(row) for row in rows)


def symplectic_form(n: int) -> RationalMatrix:
    """The block matrix [[0, J_l], [-J_l, 0]] with J_l the antidiagonal
    permutation matrix of size l = n/2."""
    if n % 2:
        raise ValueError(f"size must be even, got {n}")
    rows = [[Fraction(0)] * n for _ in range(n)]
    l = n // 2
    for i in range(n):
        rows[i][n - 1 - i] = Fraction(1) if i < l else Fraction(-1)
    return tuple(tuple(row) for row in rows)


def _matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_transpose(a: RationalMatrix) -> RationalMatrix:
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))


def msp_membership(a: RationalMatrix) -> Optional[Fraction]:
    """Exact membership in the symplectic monoid.

    Returns the scalar c such that both A^T J A and A J A^T equal c J, or
    None when no single scalar works.  Everything is computed in exact
    rational arithmetic.
    """
    n = len(a)
    if n % 2:
        raise ValueError(f"size must be even, got {n}")
    j = symplectic_form(n)
    left = _matmul(_matmul(_mat_transpose(a), j), a)
    right = _matmul(_matmul(a, j), _mat_transpose(a))
    c: Optional[Fraction] = None
    for product in (left, right):
        for r in range(n):
            for s in range(n):
                if j[r][s] == 0:
                    if product[r][s] != 0:
                        return None
                    continue
                ratio = product[r][s] / j[r][s]
                if c is None:
                    c = ratio
                elif ratio != c:
                    return None
    return c
