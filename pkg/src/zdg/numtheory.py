"""Integer arithmetic for moduli up to 2**63 - 1.

Factorization is trial division by primes below 10**6, then deterministic
Miller-Rabin and Pollard-Brent on whatever cofactor remains.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

import numpy as np

from zdg import _kernels
from zdg.errors import DomainError

MAX_MODULUS = 2**63 - 1
TRIAL_LIMIT = 10**6

__all__ = [
    "MAX_MODULUS",
    "Factorization",
    "factorize",
    "euler_phi",
    "divisors",
    "proper_divisor_classes_domain",
    "is_squarefree",
    "is_prime",
    "valuation",
    "gcd",
    "divisor_table",
]


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if prod(p**e for p, e in self.factors) != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"malformed factor list {self.factors}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = np.ones(TRIAL_LIMIT, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(TRIAL_LIMIT**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return tuple(np.flatnonzero(sieve).tolist())


def _check(n: int, lo: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < lo:
        raise DomainError(f"{n} is below the minimum {lo}")
    if n > MAX_MODULUS:
        raise DomainError(f"{n} exceeds 2**63 - 1")


def is_prime(n: int) -> bool:
    return n >= 2 and _kernels.is_prime(n)


def _split(m: int, out: dict[int, int]) -> None:
    # m > 1, no prime factor below TRIAL_LIMIT
    if _kernels.is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    f = _kernels.pollard_brent(m, 1)
    _split(f, out)
    _split(m // f, out)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    _check(n, 2)
    found: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def euler_phi(m: int) -> int:
    _check(m, 1)
    if m == 1:
        return 1
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(m))


def divisors(n: int) -> list[int]:
    _check(n, 1)
    if n == 1:
        return [1]
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def proper_divisor_classes_domain(n: int) -> list[int]:
    """Divisors d of n with 1 < d < n, ascending."""
    _check(n, 2)
    return divisors(n)[1:-1]


def is_squarefree(n: int) -> bool:
    _check(n, 2)
    return all(e == 1 for _, e in factorize(n))


def valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    _check(n, 1)
    if p < 2:
        raise DomainError(f"valuation base must be >= 2, got {p}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisor_table(n: int) -> list[tuple[int, int, int]]:
    """``(d, phi(n // d), smallest prime of d)`` for every divisor d of n, ascending in d.

    Built directly from the exponent vectors so no divisor is refactored;
    the smallest-prime entry is 0 for d = 1.
    """
    _check(n, 2)
    rows = [(1, 1, 0)]
    for p, a in factorize(n):
        nxt = []
        for d, ph, spf in rows:
            pk = 1
            for k in range(a + 1):
                # exponent of p left in n // d is a - k
                r = a - k
                ph_p = (p - 1) * p ** (r - 1) if r else 1
                nxt.append((d * pk, ph * ph_p, spf or (p if k else 0)))
                pk *= p
        rows = nxt
    rows.sort()
    return rows
