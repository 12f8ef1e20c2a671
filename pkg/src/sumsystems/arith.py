"""Exact arithmetic-function algebra under Dirichlet convolution.

Everything here is integer-valued and exact: factorisation, the Mobius
function, classical divisor functions d_j, their "non-trivial factor"
companions c_j, and the two-parameter family c_j^(r) obtained by convolving
c_j with 1^(*r) (or with mu^(*|r|) when r is negative).  Convolution powers
of e - mu count ordered factorisations into square-free non-trivial factors,
up to sign; they drive the counting module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt
from typing import Callable

MAX_INPUT = 2**63 - 1  # domain cap; keeps factorisation cost bounded


@dataclass(frozen=True)
class PrimeFactorisation:
    """n as a product of primes, exponents included, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def little_omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def _check_positive(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > MAX_INPUT:
        raise ValueError(f"input {n} exceeds the 2**63 - 1 cap")
    return n


@lru_cache(maxsize=None)
def factorise(n: int) -> PrimeFactorisation:
    """Trial-division factorisation of a positive integer up to 2**63 - 1."""
    _check_positive(n)
    m = n
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    # remaining prime factors are of the form 6k +- 1
    p = 5
    while p <= isqrt(m):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if m > 1:
        factors.append((m, 1))
    return PrimeFactorisation(n, tuple(factors))


def big_omega(n: int) -> int:
    return factorise(n).big_omega


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n in ascending order."""
    divs = [1]
    for p, e in factorise(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=None)
def nontrivial_divisors(n: int) -> tuple[int, ...]:
    """Divisors of n that are >= 2, ascending (n itself included)."""
    return divisors(n)[1:]


def mobius(n: int) -> int:
    pf = factorise(n)
    if not pf.is_squarefree:
        return 0
    return -1 if pf.little_omega % 2 else 1


def modified_mobius(n: int) -> int:
    """(mu - e)(n): the Mobius function with its value at 1 removed.

    Equals (-1)**Omega(n) on square-free n > 1 and 0 elsewhere, including
    n = 1.
    """
    pf = factorise(n)
    if pf.n == 1 or not pf.is_squarefree:
        return 0
    return -1 if pf.big_omega % 2 else 1


class ArithmeticFunction:
    """Integer-valued function on the positive integers, memoised per instance.

    Instances form a commutative ring under pointwise + and Dirichlet
    convolution; only the pieces needed here are implemented.
    """

    __slots__ = ("_rule", "name", "_cache", "_powers")

    def __init__(self, rule: Callable[[int], int], name: str = "") -> None:
        self._rule = rule
        self.name = name
        self._cache: dict[int, int] = {}
        self._powers: dict[int, "ArithmeticFunction"] = {}

    def __call__(self, n: int) -> int:
        _check_positive(n)
        cached = self._cache.get(n)
        if cached is None:
            cached = self._cache[n] = self._rule(n)
        return cached

    def __repr__(self) -> str:
        return f"ArithmeticFunction({self.name or self._rule!r})"


def convolve(f: ArithmeticFunction, g: ArithmeticFunction) -> ArithmeticFunction:
    """Dirichlet convolution: (f * g)(n) = sum over d | n of f(d) g(n/d)."""

    def rule(n: int) -> int:
        return sum(f(d) * g(n // d) for d in divisors(n))

    return ArithmeticFunction(rule, name=f"({f.name}*{g.name})")


def convolution_power(f: ArithmeticFunction, j: int) -> ArithmeticFunction:
    """f convolved with itself j times; j = 0 gives the identity e."""
    if j < 0:
        raise ValueError("convolution powers need j >= 0")
    if j == 0:
        return E
    if j == 1:
        return f
    power = f._powers.get(j)
    if power is None:
        power = convolve(f, convolution_power(f, j - 1))
        power.name = f"{f.name}^(*{j})"
        f._powers[j] = power
    return power


E = ArithmeticFunction(lambda n: 1 if n == 1 else 0, name="e")
ONE = ArithmeticFunction(lambda n: 1, name="1")
MU = ArithmeticFunction(mobius, name="mu")
ONE_MINUS_E = ArithmeticFunction(lambda n: 0 if n == 1 else 1, name="(1-e)")
E_MINUS_MU = ArithmeticFunction(lambda n: -modified_mobius(n), name="(e-mu)")


def classical_divisor(j: int, n: int) -> int:
    """d_j(n): ordered factorisations of n into j positive factors.

    Computed from the prime exponents as a product of binomials, which keeps
    it independent of the convolution machinery (d_j = 1^(*j) is a test
    cross-check, not the implementation).
    """
    if j < 0:
        raise ValueError("classical_divisor needs j >= 0")
    pf = factorise(n)
    if j == 0:
        return 1 if n == 1 else 0
    result = 1
    for _, e in pf.factors:
        result *= comb(e + j - 1, e)
    return result


def nontrivial_divisor(j: int, n: int) -> int:
    """c_j(n): ordered factorisations of n into j factors, all >= 2.

    Alternating binomial sum over classical divisor functions, from
    (1 - e)^(*j) expanded binomially.  Vanishes when j > Omega(n).
    """
    if j < 0:
        raise ValueError("nontrivial_divisor needs j >= 0")
    _check_positive(n)
    return sum(
        (-1) ** i * comb(j, i) * classical_divisor(j - i, n) for i in range(j + 1)
    )


_assoc_cache: dict[tuple[int, int], ArithmeticFunction] = {}


def _associated_fn(j: int, r: int) -> ArithmeticFunction:
    fn = _assoc_cache.get((j, r))
    if fn is None:
        base = convolution_power(ONE_MINUS_E, j)
        if r >= 0:
            fn = convolve(base, convolution_power(ONE, r))
        else:
            # negative upper index: convolve with mu^(*|r|) explicitly
            fn = convolve(base, convolution_power(MU, -r))
        fn.name = f"c_{j}^({r})"
        _assoc_cache[(j, r)] = fn
    return fn


def associated_divisor(j: int, r: int, n: int) -> int:
    """c_j^(r)(n) = ((1-e)^(*j) * 1^(*r))(n), with 1^(*r) read as mu^(*-r)
    for negative r.

    For r >= 0 this counts ordered factorisations of n into j + r factors
    of which the first j are >= 2.
    """
    if j < 0:
        raise ValueError("associated_divisor needs j >= 0")
    return _associated_fn(j, r)(n)


def squarefree_ordered_count(length: int, n: int) -> int:
    """(e - mu)^(*length)(n): signed count of ordered factorisations of n
    into `length` square-free factors >= 2.

    The sign is (-1)**(Omega(n) + length); length = 0 gives e(n).
    """
    if length < 0:
        raise ValueError("squarefree_ordered_count needs length >= 0")
    return convolution_power(E_MINUS_MU, length)(n)
