"""Exact integer combinatorics and the three-way counting reports.

Every count is reported as a comparison of up to three values: a brute-force
enumeration oracle, a form reconstructed from a proof (expected to agree),
and the closed form as printed (audited, allowed to disagree).  Nothing is
asserted here; the reports carry agreement flags and the callers decide.
All arithmetic uses unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Optional

from .rook import Rook, triangular_ranks
from .symplectic import (
    DESK_LIMIT,
    FamilySpec,
    ResourceLimitError,
    _check_even,
    enum_family,
)


@dataclass(frozen=True)
class CountReport:
    """One row of a verification table."""

    parameters: tuple[tuple[str, int], ...]
    oracle: int
    proof_form: Optional[int] = None
    paper_form: Optional[int] = None
    label: str = ""

    @property
    def agree_oracle_proof(self) -> Optional[bool]:
        return None if self.proof_form is None else self.oracle == self.proof_form

    @property
    def agree_oracle_paper(self) -> Optional[bool]:
        return None if self.paper_form is None else self.oracle == self.paper_form

    def to_json_dict(self) -> dict:
        out = {
            "parameters": dict(self.parameters),
            "oracle": self.oracle,
            "proof_form": self.proof_form,
            "paper_form": self.paper_form,
            "agree_oracle_proof": self.agree_oracle_proof,
            "agree_oracle_paper": self.agree_oracle_paper,
        }
        if self.label:
            out["label"] = self.label
        return out

    def text_row(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters)
        forms = f"oracle={self.oracle}"
        forms += f" proof={'-' if self.proof_form is None else self.proof_form}"
        forms += f" paper={'-' if self.paper_form is None else self.paper_form}"
        flags = []
        for name, flag in (
            ("proof", self.agree_oracle_proof),
            ("paper", self.agree_oracle_paper),
        ):
            flags.append(f"{name}:{'-' if flag is None else 'ok' if flag else 'MISMATCH'}")
        line = f"{params}  {forms}  {' '.join(flags)}"
        if self.label:
            line += f"  # {self.label}"
        return line


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling numbers of the second kind via the recurrence
    S(m, k) = S(m-1, k-1) + k S(m-1, k); out-of-range arguments are 0."""
    if m == 0 and k == 0:
        return 1
    if m < 0 or k < 0 or k > m or (m > 0 and k == 0):
        return 0
    return stirling2(m - 1, k - 1) + k * stirling2(m - 1, k)


def stirling2_inclusion_exclusion(m: int, k: int) -> int:
    """The alternating-sum formula, kept as an independent cross-check."""
    if m < 0 or k < 0 or k > m:
        return 0
    total = sum((-1) ** i * comb(k, i) * (k - i) ** m for i in range(k + 1))
    q, r = divmod(total, factorial(k))
    if r:
        raise ArithmeticError(f"inclusion-exclusion sum not divisible at ({m},{k})")
    return q


def bell(m: int) -> int:
    if m < 0:
        raise ValueError("Bell numbers need a nonnegative index")
    return sum(stirling2(m, k) for k in range(m + 1))


def admissible_count(n: int, k: int) -> int:
    """C(l, k) 2^k with l = n/2; the tests compare it with enumeration."""
    _check_even(n)
    if k < 0:
        raise ValueError("k must be nonnegative")
    l = n // 2
    return comb(l, k) * 2**k


def rank_count_rook(n: int, k: int) -> int:
    """C(n, k) n! / (n-k)!, the number of size-n rooks of rank k."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    return comb(n, k) * factorial(n) // factorial(n - k)


def _census(n: int) -> dict[tuple[int, int, int], int]:
    counts: dict[tuple[int, int, int], int] = {}
    for x in enum_family(FamilySpec(n, "rook")):
        key = triangular_ranks(x)
        counts[key] = counts.get(key, 0) + 1
    return counts


def triangular_census(n: int) -> list[CountReport]:
    """Per-triple counts of rooks by (lower, diagonal, upper) ranks.

    oracle: exhaustive census.  paper_form: the printed factored product
    C(n,b) S(n+1,n+1-a) S(n+1,n+1-c), recorded even where it disagrees.
    """
    if n > DESK_LIMIT:
        raise ResourceLimitError(f"census supports sizes up to {DESK_LIMIT}, got {n}")
    counts = _census(n)
    sums: dict[int, int] = {}
    for (a, b, c), count in counts.items():
        sums[a + b + c] = sums.get(a + b + c, 0) + count
    for k in range(n + 1):
        if sums.get(k, 0) != rank_count_rook(n, k):
            raise RuntimeError(f"census at n={n} does not partition rank {k}")
    reports = []
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for c in range(n + 1 - a - b):
                printed = comb(n, b) * stirling2(n + 1, n + 1 - a) * stirling2(n + 1, n + 1 - c)
                reports.append(
                    CountReport(
                        parameters=(("n", n), ("a", a), ("b", b), ("c", c)),
                        oracle=counts.get((a, b, c), 0),
                        paper_form=printed,
                    )
                )
    return reports


def preimage_weight(x: Rook) -> int:
    """2^(a+c) 3^b for the triangular ranks (a, b, c) of x: the number of
    upper-triangular symplectic rooks folding onto x."""
    a, b, c = triangular_ranks(x)
    return 2 ** (a + c) * 3**b


def borel_sp_rank_count(l: int, k: int) -> CountReport:
    """Rank-k count of upper-triangular symplectic rooks at n = 2l, three
    ways: direct enumeration, the per-element preimage weights summed over
    the rank-k rooks of size l, and the printed closed form."""
    if not 1 <= l <= 4:
        raise ValueError(f"l out of supported range 1..4, got {l}")
    if not 0 <= k <= l:
        raise ValueError(f"k out of range 0..{l}")
    oracle = len(enum_family(FamilySpec(2 * l, "borel-sp", rank=k)))
    proof = sum(
        preimage_weight(x)
        for x in enum_family(FamilySpec(l, "rook", rank=k))
    )
    printed = 0
    for a in range(k + 1):
        for b in range(k + 1 - a):
            c = k - a - b
            printed += (
                2 ** (a + c)
                * 3**b
                * comb(l, b)
                * stirling2(l + 1, l + 1 - a)
                * stirling2(l + 1, l + 1 - c)
            )
    return CountReport(
        parameters=(("l", l), ("k", k)),
        oracle=oracle,
        proof_form=proof,
        paper_form=printed,
    )
