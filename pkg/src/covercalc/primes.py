"""Integer primality testing and factorization into distinct primes.

Everything here is exact and deterministic for inputs below 2**64
(Miller-Rabin with a verified witness set); larger inputs fall back to a
fixed extended witness set that is proven complete up to ~3.3e24 and is
probabilistically safe beyond.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Witnesses certifying Miller-Rabin for all n < 3,317,044,064,679,887,385,961,981
# (Sorenson-Webster); the first twelve already cover every 64-bit integer.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _miller_rabin(n: int, a: int) -> bool:
    # returns True if n passes the strong-pseudoprime test to base a
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Primality test, deterministic for all n below 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    return all(_miller_rabin(n, a) for a in _MR_WITNESSES if a < n)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n odd composite, not a prime power guard needed
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")  # pragma: no cover


def _factor_into(n: int, out: set[int]) -> None:
    while n % 2 == 0:
        out.add(2)
        n //= 2
    for p in range(3, 10_000, 2):
        if p * p > n:
            break
        while n % p == 0:
            out.add(p)
            n //= p
    if n == 1:
        return
    if is_prime(n):
        out.add(n)
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, kept strictly increasing."""

    primes: tuple[int, ...]

    def __post_init__(self):
        for q in self.primes:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")

    @classmethod
    def of(cls, primes) -> "PrimeSet":
        return cls(tuple(sorted(set(primes))))

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, q: int) -> bool:
        return q in self.primes

    def issubset(self, other: "PrimeSet") -> bool:
        return set(self.primes) <= set(other.primes)

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet.of(self.primes + other.primes)

    def product(self) -> int:
        return math.prod(self.primes)


def prime_factors(m: int) -> PrimeSet:
    """Distinct prime divisors of m >= 1 (trial division, then Pollard rho)."""
    if m < 1:
        raise ValueError("prime_factors requires m >= 1")
    found: set[int] = set()
    _factor_into(m, found)
    return PrimeSet.of(found)
