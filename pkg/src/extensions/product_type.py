from functools import lru_cache
from itertools import combinations, product

from sympy import divisors

from abelian import AbelianGroup
from catalog import is_cr1_group, is_cr2_group


def _matches(g, factors):
    return g == AbelianGroup.from_factors(factors)


def in_product_families(g):
    """Membership in the seven parametric families of product type groups

    The order of g fixes the free parameter of every family except
    Z/2k x Z/2l x (Z/2)^2, where k l is fixed instead.
    """
    n = g.order
    if g.rank <= 3:
        return True
    if n % 64 == 0 and _matches(g, [n // 32, 4, 4, 2]):
        return True
    if n % 81 == 0 and _matches(g, [n // 27, 3, 3, 3]):
        return True
    if n % 16 == 0 and any(
        _matches(g, [2 * k, 2 * (n // 16 // k), 2, 2]) for k in divisors(n // 16)
    ):
        return True
    if n % 32 == 0 and _matches(g, [n // 16, 2, 2, 2, 2]):
        return True
    return _matches(g, [4, 4, 2, 2, 2]) or _matches(g, [2, 2, 2, 2, 2, 2])


def _splits(parts):
    """Every way to share a multiset of parts between two factors"""
    seen = set()
    for size in range(len(parts) + 1):
        for chosen in combinations(range(len(parts)), size):
            first = tuple(parts[i] for i in chosen)
            second = tuple(parts[i] for i in range(len(parts)) if i not in chosen)
            if first not in seen:
                seen.add(first)
                yield first, second


def product_decompositions(g):
    """Every pair (G1, G2) with G = G1 x G2, G1 in Cr_1 and G2 in Cr_2"""
    primes = g.primes
    per_prime = [list(_splits(g.type_at(p).parts)) for p in primes]
    found = set()
    for choice in product(*per_prime):
        first = AbelianGroup({p: split[0] for p, split in zip(primes, choice)})
        second = AbelianGroup({p: split[1] for p, split in zip(primes, choice)})
        if is_cr1_group(first) and is_cr2_group(second):
            found.add((first, second))
    return sorted(found)


@lru_cache(maxsize=None)
def is_product_type(g):
    return in_product_families(g)


def is_product_type_by_decomposition(g):
    return bool(product_decompositions(g))
