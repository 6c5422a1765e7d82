import warnings
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd

import config


def c_q(r, b, i):
    """Local correction of orbifold Riemann-Roch at 1/r(1,-1,b) for a divisor of local type i

    c_Q = -i (r^2 - 1) / (12 r) + sum_{j=1}^{i-1} bj (r - bj) / (2r), with bj
    taken modulo r.

    Raises
    ------
        ValueError
            Raises a value error if i is not in 0..r-1 or b is not a unit mod r
    """
    if not 0 <= i < r:
        raise ValueError(f"The local type must lie in 0..{r - 1}, got {i}")
    if gcd(b, r) != 1:
        raise ValueError(f"b = {b} is not a unit modulo r = {r}")
    total = Fraction(-i * (r * r - 1), 12 * r)
    for j in range(1, i):
        residue = (b * j) % r
        total += Fraction(residue * (r - residue), 2 * r)
    return total


@lru_cache(maxsize=None)
def genus_contribution(r, b):
    """The amount t a point 1/r(1,-1,b) takes off h^0(-K)

    -K has local type r-1 at the point, and the c_2 term of Riemann-Roch
    contributes (r - 1/r)/12 after substituting the Miyaoka equality, so
    t = (r - 1/r)/12 - c_q(r, b, r-1). This agrees with b(r-b)/(2r); if it
    ever does not, the derived value is kept and a warning is issued.
    """
    derived = (r - Fraction(1, r)) / 12 - c_q(r, b, r - 1)
    closed = Fraction(b * (r - b), 2 * r)
    if derived != closed:
        warnings.warn(
            f"Riemann-Roch term at 1/{r}(1,-1,{b}) is {derived}, expected {closed}"
        )
    return derived


def genus_sum(basket):
    return sum((point.n * genus_contribution(point.r, point.b) for point in basket), Fraction(0))


def anticanonical_cube(basket, h0=config.DEFAULT_H0):
    """(-K)^3 = 2 (h0 - 3) + 2 sum n t"""
    return 2 * (h0 - 3) + 2 * genus_sum(basket)


def miyaoka_valid(basket):
    """Whether sum n (r - 1/r) < 24"""
    return basket.miyaoka_sum < config.MIYAOKA_BOUND


def max_point_count():
    """The largest number of non-Gorenstein points a basket passing the Miyaoka bound can have

    Every point adds at least 2 - 1/2 to the Miyaoka sum.
    """
    return ceil(config.MIYAOKA_BOUND / (2 - Fraction(1, 2))) - 1
