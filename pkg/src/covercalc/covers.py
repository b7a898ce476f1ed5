"""Homology of branched cyclic covers and the prime obstruction set.

The order of H1 of the n-fold branched cyclic cover is the absolute value of
the integer resultant of t**n - 1 with the degree-2d polynomial attached to
the knot; order 0 encodes an infinite group.  The obstruction set S(K, p)
collects every prime dividing prod(p**d_j - 1) over the degrees d_j of the
mod-p irreducible factors other than t, and covers with order-n branching
avoid p-torsion whenever n is a multiple of no element of S(K, p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .knots import Knot
from .polynomials import (
    IntPoly,
    ModPoly,
    gcd_fp,
    int_poly_gcd,
    irreducible_factor_degrees,
    resultant,
)
from .primes import PrimeSet, is_prime, prime_factors, primes_up_to

__all__ = [
    "CoverOrder",
    "PrimeSet",
    "HfkDimBound",
    "fox_order",
    "order_from_tilde",
    "is_zp_homology_sphere",
    "skp_set",
    "skp_from_tilde",
    "admissible",
    "admissible_primes",
    "hfk_dim_upper",
]


@dataclass(frozen=True)
class CoverOrder:
    """|H1| of the n-fold branched cyclic cover; order 0 means infinite."""

    n: int
    order: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cover index must be >= 1")
        if self.order < 0:
            raise ValueError("order must be >= 0")

    @property
    def infinite(self) -> bool:
        return self.order == 0


def order_from_tilde(f: IntPoly, n: int) -> CoverOrder:
    """|Res_Z(t**n - 1, f)| for the degree-2d integer polynomial f."""
    if n < 1:
        raise ValueError("cover index must be >= 1")
    cyc = IntPoly.t_power_minus_one(n)
    order = abs(resultant(cyc, f))
    if order == 0:
        # vanishing resultant must come from a shared cyclotomic factor
        common = int_poly_gcd(cyc, f)
        if common.degree < 1:  # pragma: no cover
            raise ArithmeticError("zero resultant without a common factor")
    return CoverOrder(n=n, order=order)


def fox_order(K: Knot, n: int) -> CoverOrder:
    """Order of H1 of the n-fold branched cyclic cover of the knot."""
    return order_from_tilde(K.tilde, n)


def is_zp_homology_sphere(K: Knot, n: int, p: int) -> bool:
    """Whether the n-fold branched cyclic cover has no p-torsion and finite H1.

    Decided by the gcd of t**n - 1 and the knot polynomial over F_p, which
    avoids the huge integer resultants for large n; an infinite H1 reports
    False.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("cover index must be >= 1")
    fbar = ModPoly.reduce(K.tilde, p)
    if fbar.is_zero:  # impossible for value 1 at t=1; guards corrupt data
        raise ValueError(f"{K.name}: polynomial vanishes mod {p}")
    cyc = ModPoly.reduce(IntPoly.t_power_minus_one(n), p)
    return gcd_fp(cyc, fbar).degree == 0


def skp_from_tilde(f: IntPoly, p: int) -> PrimeSet:
    """Obstruction primes from the mod-p irreducible factor degrees of f.

    Every prime dividing p**d - 1 for some factor degree d is included; the
    factor t is stripped first and multiplicities are irrelevant.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fbar = ModPoly.reduce(f, p)
    if fbar.is_zero:
        raise ValueError(f"polynomial vanishes identically mod {p}; bad data")
    out = PrimeSet(())
    for d in irreducible_factor_degrees(fbar).degrees():
        out = out.union(prime_factors(p**d - 1))
    return out


def skp_set(K: Knot, p: int) -> PrimeSet:
    """The finite prime set S(K, p) gating p-torsion in branched covers."""
    return skp_from_tilde(K.tilde, p)


def admissible(n: int, s: PrimeSet) -> bool:
    """True iff n is a multiple of no element of s."""
    return all(n % q for q in s)


def admissible_primes(K: Knot, p: int, limit: int) -> list[int]:
    """All primes n <= limit admissible for S(K, p); always contains p."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    s = skp_set(K, p)
    return [n for n in primes_up_to(limit) if admissible(n, s)]


@dataclass(frozen=True)
class HfkDimBound:
    """Upper bounds for dim HFK of the lifted knot in the n-fold cover of a
    knot with arc index delta: the tight (delta!)**n / 2**(delta-1), rounded
    up when not integral, and the loose (delta!)**n."""

    tight: int
    loose: int


def hfk_dim_upper(delta: int, n: int) -> HfkDimBound:
    """Arc-index bound on dim HFK over the n-fold branched cyclic cover."""
    if delta < 2:
        raise ValueError("arc index must be >= 2")
    if n < 1:
        raise ValueError("cover index must be >= 1")
    loose = math.factorial(delta) ** n
    denom = 2 ** (delta - 1)
    tight = -(-loose // denom)  # exact when divisible, else ceiling
    return HfkDimBound(tight=tight, loose=loose)
