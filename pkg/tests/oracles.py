"""Independent reference implementations used to check the library.

Nothing here shares an algorithm with the code under test: determinants are
plain fraction Gaussian elimination, factorization is exhaustive enumeration
of irreducibles, primality is trial division.
"""

from fractions import Fraction
from itertools import product

from covercalc.polynomials import ModPoly


def det_fraction(matrix) -> Fraction:
    """Determinant by textbook Gaussian elimination over Q."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def monic_irreducibles(p: int, max_degree: int) -> list[ModPoly]:
    """Every monic irreducible over F_p of degree <= max_degree, by sieve."""
    found: list[ModPoly] = []
    for d in range(1, max_degree + 1):
        for tail in product(range(p), repeat=d):
            f = ModPoly(p, list(tail) + [1])
            if all(not (f % g).is_zero for g in found if g.degree <= d // 2):
                found.append(f)
    return found


def factor_degrees_exhaustive(f: ModPoly, irreducibles=None):
    """Distinct irreducible factor degrees of f, skipping the factor t,
    via trial division against the enumerated irreducible list.

    Valid whenever deg f <= 2*max_degree + 1 of the supplied list.
    """
    irr = irreducibles
    if irr is None:
        irr = monic_irreducibles(f.p, max(1, f.degree // 2 + 1))
    max_listed = max(g.degree for g in irr)
    f = f.monic()
    seen: dict[int, int] = {}
    for g in irr:
        if (f % g).is_zero:
            if g.coeffs != (0, 1):
                seen[g.degree] = seen.get(g.degree, 0) + 1
            while (f % g).is_zero:
                f = f // g
    if f.degree > 0:
        # leftover has no factor of degree <= max_listed, hence is irreducible
        # as long as it cannot split into two larger pieces
        assert f.degree <= 2 * max_listed + 1, f"oracle cannot certify degree {f.degree}"
        seen[f.degree] = seen.get(f.degree, 0) + 1
    return tuple(sorted(seen.items()))
