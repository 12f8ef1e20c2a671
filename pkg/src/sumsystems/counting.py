"""Counting sum systems.

The number of m-part sum systems for N is a finite Stirling-weighted sum of
signed square-free factorisation counts; everything else here (two-part
shortcut, unordered counts, divisor-sum identities, the fixed-tuple
two-part formula) hangs off that and off the c_j divisor functions.  The
brute-force count, driven by the JOF enumerator, is the oracle the closed
forms are measured against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .arith import (
    big_omega,
    divisors,
    mobius,
    nontrivial_divisor,
    squarefree_ordered_count,
)
from .jof import DEFAULT_CAP, enumerate_jofs, ordered_factorisations

_stirling_rows: list[list[int]] = [[1]]


def stirling2(total: int, blocks: int) -> int:
    """Stirling number of the second kind: partitions of a `total`-set into
    `blocks` non-empty blocks.  Grown row by row and cached.
    """
    if total < 0 or blocks < 0:
        raise ValueError("stirling2 needs non-negative arguments")
    if blocks > total:
        return 0
    while len(_stirling_rows) <= total:
        prev = _stirling_rows[-1]
        length = len(_stirling_rows)
        row = [0] * (length + 1)
        for k in range(1, length + 1):
            above = prev[k] if k < length else 0
            row[k] = k * above + prev[k - 1]
        _stirling_rows.append(row)
    return _stirling_rows[total][blocks]


@dataclass(frozen=True)
class CountResult:
    """A count together with how it was obtained."""

    value: int
    method: str  # "closed-form", "brute-force" or "divisor-recurrence"


@lru_cache(maxsize=None)
def _n_m(n: int, m: int) -> int:
    """Number of m-part sum systems for n (ordered part tuples)."""
    if m == 0:
        return 1 if n == 1 else 0
    fact = factorial(m)
    return sum(
        fact * stirling2(length, m) * squarefree_ordered_count(length, n)
        for length in range(m, big_omega(n) + 1)
    )


def count_m_part(n: int, m: int) -> CountResult:
    """Closed-form count of m-part sum systems for n.

    m = 0 is the convention value: 1 at n = 1, else 0; it makes the
    divisor-sum identities uniform.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    return CountResult(_n_m(n, m), "closed-form")


def count_two_part(n: int) -> CountResult:
    """Two-part count as twice the sum of c_L(n) over 2 <= L <= Omega(n).

    Deliberately routed through the multiplicative c_L formula rather than
    the Stirling sum, so the two agree only if both are right.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 2 * sum(nontrivial_divisor(length, n) for length in range(2, big_omega(n) + 1))
    return CountResult(total, "closed-form")


@lru_cache(maxsize=None)
def _n_m_recurrence(n: int, m: int) -> int:
    if m == 0:
        return 1 if n == 1 else 0
    if n == 1:
        return 0
    return sum(
        (m - 1) * _n_m_recurrence(d, m) + m * _n_m_recurrence(d, m - 1)
        for d in divisors(n)[:-1]
    )


def count_by_recurrence(n: int, m: int) -> CountResult:
    """Same count, but from the divisor-sum recurrence with only
    N = 1 as the base case.  An independent route for cross-checking.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    return CountResult(_n_m_recurrence(n, m), "divisor-recurrence")


def _m_m(n: int, m: int) -> int:
    """Unordered count: the ordered count divided by m! (always divides)."""
    ordered = _n_m(n, m)
    q, r = divmod(ordered, factorial(m))
    if r:
        raise RuntimeError(
            f"ordered count {ordered} for n={n}, m={m} is not divisible by {m}!;"
            " this indicates a bug"
        )
    return q


def count_unordered(n: int, m: int) -> CountResult:
    """m-part sum systems counted up to reordering the parts."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    return CountResult(_m_m(n, m), "closed-form")


@dataclass(frozen=True)
class DivisorSumReport:
    """Residuals (left minus right) of the four divisor-sum identities.

    All four are zero exactly when the counts satisfy their recurrences:
    the plain and Mobius-inverted forms for ordered counts, and the same
    pair for unordered counts.
    """

    n: int
    m: int
    ordered_plain: int
    ordered_mobius: int
    unordered_plain: int
    unordered_mobius: int

    @property
    def ok(self) -> bool:
        return (
            self.ordered_plain == 0
            and self.ordered_mobius == 0
            and self.unordered_plain == 0
            and self.unordered_mobius == 0
        )

    def as_dict(self) -> dict:
        return {
            "N": self.n,
            "m": self.m,
            "residuals": {
                "ordered_plain": self.ordered_plain,
                "ordered_mobius": self.ordered_mobius,
                "unordered_plain": self.unordered_plain,
                "unordered_mobius": self.unordered_mobius,
            },
            "ok": self.ok,
        }


def divisor_sum_check(n: int, m: int) -> DivisorSumReport:
    """Evaluate all four divisor-sum identities at (n, m) exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < 1:
        raise ValueError("m must be at least 1")
    proper = divisors(n)[:-1]
    ordered = _n_m(n, m)
    unordered = _m_m(n, m)
    ordered_plain = ordered - sum(
        (m - 1) * _n_m(d, m) + m * _n_m(d, m - 1) for d in proper
    )
    ordered_mobius = ordered + m * sum(
        mobius(n // d) * (_n_m(d, m) + _n_m(d, m - 1)) for d in proper
    )
    unordered_plain = unordered - sum(
        (m - 1) * _m_m(d, m) + _m_m(d, m - 1) for d in proper
    )
    unordered_mobius = unordered + sum(
        mobius(n // d) * (m * _m_m(d, m) + _m_m(d, m - 1)) for d in proper
    )
    return DivisorSumReport(
        n, m, ordered_plain, ordered_mobius, unordered_plain, unordered_mobius
    )


def two_dim_fixed_tuple(n: int) -> CountResult:
    """Unordered two-part systems for the tuple (n, n):
    sum over j of c_j(n)^2 + c_j(n) c_{j+1}(n).

    This is a fixed-tuple count; it is not half of the all-tuples two-part
    count for n^2 (at n = 4 they are 3 and 7).
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for j in range(1, big_omega(n) + 1):
        cj = nontrivial_divisor(j, n)
        total += cj * cj + cj * nontrivial_divisor(j + 1, n)
    return CountResult(total, "closed-form")


def binomial_transform(seq: Sequence[int]) -> list[int]:
    """a_j = sum over i <= j of C(j, i) b_i."""
    return [sum(comb(j, i) * seq[i] for i in range(j + 1)) for j in range(len(seq))]


def binomial_inversion(seq: Sequence[int]) -> list[int]:
    """Inverse of binomial_transform: b_j = sum of (-1)**(j-i) C(j, i) a_i."""
    return [
        sum((-1) ** (j - i) * comb(j, i) * seq[i] for i in range(j + 1))
        for j in range(len(seq))
    ]


def brute_force_count(n: int, m: int, cap: int = DEFAULT_CAP) -> CountResult:
    """Count m-part systems for n by enumerating every JOF of every ordered
    tuple.  The independent oracle for count_m_part.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < 1:
        raise ValueError("m must be at least 1")
    total = 0
    for parts in ordered_factorisations(n, m):
        total += len(enumerate_jofs(parts, cap=cap))
    return CountResult(total, "brute-force")
