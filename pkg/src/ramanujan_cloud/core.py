"""Elementary number-theoretic kernels: sieve, factorization, mu, phi.

Scalar functions work by trial division against a cached prime list and are
memoized, which is plenty for moduli up to ~10^9.  The million-term summation
loops elsewhere in the package go through the numpy table builders
(``phi_table``, ``mobius_table``, ``squarefree_table``) instead; tables are
built once, marked read-only, and shared, so everything here is safe to call
from concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Hard ceiling on table length; a full int64 phi table at this size is ~1.6 GB.
SIEVE_BUDGET = 200_000_000


class ResourceLimitError(MemoryError):
    """A requested sieve or table would exceed ``SIEVE_BUDGET``."""


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if limit > SIEVE_BUDGET:
        raise ResourceLimitError(f"sieve limit {limit} exceeds budget {SIEVE_BUDGET}")
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.flatnonzero(is_p).astype(np.int64)


@lru_cache(maxsize=4)
def phi_table(limit: int) -> np.ndarray:
    """phi(n) for n = 0..limit (phi[0] = 0), read-only int64 array."""
    if limit > SIEVE_BUDGET:
        raise ResourceLimitError(f"phi table of size {limit} exceeds budget")
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in sieve_primes(limit):
        phi[p::p] -= phi[p::p] // p
    phi.setflags(write=False)
    return phi


@lru_cache(maxsize=4)
def mobius_table(limit: int) -> np.ndarray:
    """mu(n) for n = 0..limit (mu[0] = 0), read-only int8 array."""
    if limit > SIEVE_BUDGET:
        raise ResourceLimitError(f"mobius table of size {limit} exceeds budget")
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in sieve_primes(limit):
        mu[p::p] *= -1
        p2 = p * p
        if p2 <= limit:
            mu[p2::p2] = 0
    mu.setflags(write=False)
    return mu


@lru_cache(maxsize=4)
def squarefree_table(limit: int) -> np.ndarray:
    """Boolean mask of squarefree n for n = 0..limit (index 0 False)."""
    if limit > SIEVE_BUDGET:
        raise ResourceLimitError(f"squarefree table of size {limit} exceeds budget")
    sf = np.ones(limit + 1, dtype=bool)
    sf[0] = False
    for p in sieve_primes(math.isqrt(limit)):
        sf[p * p :: p * p] = False
    sf.setflags(write=False)
    return sf


# Growing prime list for trial division.  Rebuilds are idempotent, so a
# benign race between concurrent callers at worst repeats work.
_trial_state: dict = {"limit": 0, "primes": []}


def _trial_primes(bound: int) -> list[int]:
    if bound > _trial_state["limit"]:
        new_limit = max(bound, 1 << 10, 2 * _trial_state["limit"])
        _trial_state["primes"] = sieve_primes(new_limit).tolist()
        _trial_state["limit"] = new_limit
    return _trial_state["primes"]


@dataclass(frozen=True)
class Factorization:
    """A natural number as its prime-power decomposition.

    ``factors`` is a tuple of (prime, exponent) pairs with primes strictly
    increasing and exponents >= 1; the product of p**e recovers ``value``.
    1 carries the empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All divisors of ``value``, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division (meant for n up to ~10^9)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    out = []
    for p in _trial_primes(math.isqrt(n)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _trial_primes(math.isqrt(n)):
        if p * p > n:
            break
        if n % p == 0:
            return False
    return True


@lru_cache(maxsize=1 << 16)
def mobius(n: int) -> int:
    """mu(n): 0 unless n is squarefree, else (-1)^(number of prime factors)."""
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


@lru_cache(maxsize=1 << 16)
def euler_phi(n: int) -> int:
    """phi(n), computed multiplicatively from the factorization."""
    out = 1
    for p, e in factorize(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def radical(a: int) -> int:
    """Product of the distinct primes dividing a; radical(1) = 1."""
    out = 1
    for p, _ in factorize(a).factors:
        out *= p
    return out


def valuation(p: int, a: int) -> int:
    """Largest K with p**K | a, for prime p and a >= 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a < 1:
        raise ValueError("a must be >= 1")
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def divisors(n: int) -> list[int]:
    return factorize(n).divisors()
