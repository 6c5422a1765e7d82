from functools import reduce, total_ordering
from itertools import product
from math import prod

from sympy import factorint, isprime

from partitions import Partition


@total_ordering
class AbelianGroup:
    def __init__(self, prime_parts=None):
        """A finite abelian group up to isomorphism, stored prime by prime

        Parameters
        ----------
            prime_parts : dict/None
                Map from a prime p to the Partition giving the type of the
                p-Sylow subgroup. Primes with an empty partition are dropped

        Raises
        ------
            ValueError
                Raises a value error if a key is not a prime
        """
        parts = {}
        for p, partition in (prime_parts or {}).items():
            if not isprime(p):
                raise ValueError(f"Prime parts must be keyed by primes, got {p}")
            partition = (
                partition if isinstance(partition, Partition) else Partition(partition)
            )
            if partition.length:
                parts[int(p)] = partition
        self._prime_parts = dict(sorted(parts.items()))

    @classmethod
    def from_factors(cls, factors):
        """The isomorphism class of a product of cyclic groups Z/n_1 x ... x Z/n_k

        Parameters
        ----------
            factors : iterable of int
                The orders of the cyclic factors, in any order. Ones are ignored

        Returns
        -------
            group : AbelianGroup
                The canonical form of the product

        Raises
        ------
            ValueError
                Raises a value error if a factor is zero or negative
        """
        exponents = {}
        for factor in factors:
            factor = int(factor)
            if factor < 1:
                raise ValueError(f"Cyclic factors must be positive, got {factor}")
            for p, e in factorint(factor).items():
                exponents.setdefault(p, []).append(e)
        return cls({p: Partition(es) for p, es in exponents.items()})

    @classmethod
    def parse(cls, text):
        """Read the comma separated factor form, e.g. "2,4,4,8", "1" for trivial"""
        text = text.strip()
        if not text:
            raise ValueError("An empty string does not describe a group")
        try:
            factors = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"Groups are written as comma separated integers, got '{text}'")
        return cls.from_factors(factors)

    @classmethod
    def cyclic(cls, n):
        return cls.from_factors([n])

    @classmethod
    def trivial(cls):
        return cls()

    @property
    def prime_parts(self):
        return dict(self._prime_parts)

    @property
    def primes(self):
        return list(self._prime_parts)

    @property
    def order(self):
        return prod(p ** partition.size for p, partition in self._prime_parts.items())

    @property
    def rank(self):
        return max((partition.length for partition in self._prime_parts.values()), default=0)

    @property
    def invariant_factors(self):
        """The invariant factors d_1 | d_2 | ... | d_k, ascending"""
        rank = self.rank
        factors = [1] * rank
        for p, partition in self._prime_parts.items():
            for i, e in enumerate(partition.parts):
                factors[rank - 1 - i] *= p**e
        return factors

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.rank else 1

    @property
    def is_cyclic(self):
        return self.rank <= 1

    def p_part(self, p):
        """The p-Sylow subgroup, trivial when p does not divide the order

        Raises
        ------
            ValueError
                Raises a value error if p is not prime
        """
        if not isprime(p):
            raise ValueError(f"p_part needs a prime, got {p}")
        if p not in self._prime_parts:
            return AbelianGroup()
        return AbelianGroup({p: self._prime_parts[p]})

    def type_at(self, p):
        """The partition of the p-Sylow subgroup, empty when absent"""
        return self._prime_parts.get(p, Partition())

    def direct_product(self, other):
        primes = set(self._prime_parts) | set(other._prime_parts)
        return AbelianGroup(
            {
                p: Partition(self.type_at(p).parts + other.type_at(p).parts)
                for p in primes
            }
        )

    def __mul__(self, other):
        return self.direct_product(other)

    def power(self, k):
        return reduce(AbelianGroup.direct_product, [self] * k, AbelianGroup())

    def embeds_in(self, other):
        """Whether this group is isomorphic to a subgroup of other

        A p-group of type lam embeds in one of type mu iff the conjugate of lam
        is dominated entrywise by the conjugate of mu.
        """
        for p, partition in self._prime_parts.items():
            small = partition.conjugate
            large = other.type_at(p).conjugate
            if small.length > large.length:
                return False
            if any(part > large.row(i) for i, part in enumerate(small.parts)):
                return False
        return True

    def subgroup_classes(self):
        """The isomorphism classes of all subgroups

        Per prime these are exactly the types fitting inside the type of the
        group, combined over primes.
        """
        per_prime = [
            [(p, sub) for sub in partition.sub_partitions()]
            for p, partition in self._prime_parts.items()
        ]
        return sorted(AbelianGroup(dict(choice)) for choice in product(*per_prime))

    def pretty(self):
        """Human readable product, e.g. "Z/8 x (Z/4)^2 x Z/2" """
        if not self._prime_parts:
            return "1"
        factors = sorted(set(self.invariant_factors), reverse=True)
        counts = {f: self.invariant_factors.count(f) for f in factors}
        return " x ".join(
            f"Z/{f}" if counts[f] == 1 else f"(Z/{f})^{counts[f]}" for f in factors
        )

    def _sort_key(self):
        return (self.order, self.rank, tuple(self.invariant_factors))

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self._prime_parts == other._prime_parts

    def __lt__(self, other):
        return self._sort_key() < other._sort_key()

    def __hash__(self):
        return hash(tuple((p, partition.parts) for p, partition in self._prime_parts.items()))

    def __str__(self):
        if not self._prime_parts:
            return "1"
        return ",".join(str(f) for f in self.invariant_factors)

    def __repr__(self):
        return f'AbelianGroup("{self}")'


def canonicalize(factors):
    return AbelianGroup.from_factors(factors)


def rank(g):
    return g.rank


def p_part(g, p):
    return g.p_part(p)


def direct_product(a, b):
    return a.direct_product(b)


def embeds_in(a, b):
    return a.embeds_in(b)


def all_groups_of_order(n):
    """Every abelian group of order n, in canonical order"""
    per_prime = [
        [(p, partition) for partition in Partition.all_of_size(e)]
        for p, e in factorint(n).items()
    ]
    return sorted(AbelianGroup(dict(choice)) for choice in product(*per_prime))


def all_groups_up_to(n):
    return [g for order in range(1, n + 1) for g in all_groups_of_order(order)]
