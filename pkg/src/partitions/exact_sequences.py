from itertools import product

from abelian import AbelianGroup
from partitions.littlewood_richardson import lr_coefficient, lr_support


def extension_exists(sub, quot, total):
    """Whether there is a short exact sequence 0 -> sub -> total -> quot -> 0

    Decided one prime at a time: the p-parts of types lam, nu, mu fit in such a
    sequence iff the Littlewood-Richardson coefficient c^mu_{lam,nu} is positive.

    Parameters
    ----------
        sub : AbelianGroup
            The subgroup
        quot : AbelianGroup
            The quotient
        total : AbelianGroup
            The middle term

    Returns
    -------
        exists : bool
            Whether the sequence exists
    """
    if total.order != sub.order * quot.order:
        return False
    primes = set(sub.primes) | set(quot.primes) | set(total.primes)
    return all(
        lr_coefficient(sub.type_at(p), quot.type_at(p), total.type_at(p)) > 0
        for p in primes
    )


def enumerate_extensions(sub, quot):
    """Every isomorphism class of extension of quot by sub, in canonical order"""
    primes = sorted(set(sub.primes) | set(quot.primes))
    per_prime = [
        [(p, mu) for mu in sorted(lr_support(sub.type_at(p), quot.type_at(p)))]
        for p in primes
    ]
    return sorted(AbelianGroup(dict(choice)) for choice in product(*per_prime))
