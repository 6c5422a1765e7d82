from collections import deque
from functools import lru_cache

import numpy as np
from tqdm import tqdm

import config
from abelian.group import AbelianGroup
from partitions import Partition


class OrderBoundError(ValueError):
    """Raised when a brute force computation would exceed the order bound"""


def order_bound(max_order=None):
    return config.MAX_ORACLE_ORDER if max_order is None else max_order


class GroupModel:
    def __init__(self, group, max_order=None):
        """An explicit model of a finite abelian group as residue vectors

        Element i is the i-th residue vector of Z/n_1 x ... x Z/n_k in C order,
        so element 0 is the identity.

        Parameters
        ----------
            group : AbelianGroup
                The group to model
            max_order : int/None
                The largest order the model is allowed to enumerate, config.MAX_ORACLE_ORDER if None

        Raises
        ------
            OrderBoundError
                Raises an order bound error if the group is larger than max_order
        """
        max_order = order_bound(max_order)
        if group.order > max_order:
            raise OrderBoundError(
                f"The group {group} has order {group.order}, above the bound {max_order}"
            )
        self.group = group
        self.moduli = np.array(group.invariant_factors or [1], dtype=np.int64)
        self.size = int(np.prod(self.moduli))
        self.strides = np.array(
            [int(np.prod(self.moduli[i + 1 :])) for i in range(len(self.moduli))],
            dtype=np.int64,
        )
        shape = tuple(int(n) for n in self.moduli)
        self.elements = np.indices(shape).reshape(len(shape), -1).T
        self.addition = self.index(self.elements[:, None, :] + self.elements[None, :, :])
        self.orders = np.lcm.reduce(
            self.moduli // np.gcd(self.moduli, self.elements), axis=1
        )

    def index(self, residues):
        """Index of residue vectors, reduced modulo the generator orders"""
        return (residues % self.moduli) @ self.strides

    def multiple(self, m):
        """For every element x the index of m*x"""
        return self.index(self.elements * m)

    def join(self, subgroup, g):
        """The subgroup generated by a subgroup mask and the element g"""
        result = subgroup.copy()
        coset = np.flatnonzero(subgroup)
        while True:
            coset = self.addition[coset, g]
            if result[coset[0]]:
                return result
            result[coset] = True

    def subgroups(self, max_order=None, progress=False):
        """Every subgroup as a boolean mask over the elements

        Subgroups are grown one generator at a time from the trivial subgroup,
        trying a single representative per coset. With max_order set only
        subgroups of at most that order are produced.

        Parameters
        ----------
            max_order : int/None
                The largest subgroup order to produce
            progress : bool
                Whether to show a progress bar

        Returns
        -------
            subgroups : list of np.array
                The masks, ordered by subgroup order then by mask bytes
        """
        trivial = np.zeros(self.size, dtype=bool)
        trivial[0] = True
        seen = {trivial.tobytes(): trivial}
        queue = deque([trivial])
        bar = tqdm(desc=f"Subgroups of {self.group}", leave=False, disable=not progress)
        while queue:
            subgroup = queue.popleft()
            bar.update()
            members = np.flatnonzero(subgroup)
            covered = subgroup.copy()
            for g in range(self.size):
                if covered[g]:
                    continue
                covered[self.addition[members, g]] = True
                bigger = self.join(subgroup, g)
                if max_order is not None and bigger.sum() > max_order:
                    continue
                key = bigger.tobytes()
                if key not in seen:
                    seen[key] = bigger
                    queue.append(bigger)
        bar.close()
        return sorted(seen.values(), key=lambda mask: (int(mask.sum()), mask.tobytes()))

    def _type_from_counts(self, p, counts):
        """Partition of a p-group from the number of elements killed by p^k"""
        conjugate = []
        for previous, current in zip(counts, counts[1:]):
            ratio, exponent = current // previous, 0
            while ratio > 1:
                ratio //= p
                exponent += 1
            if exponent == 0:
                break
            conjugate.append(exponent)
        return Partition(conjugate).conjugate

    def _primes(self):
        return self.group.primes

    def classify(self, subgroup):
        """The isomorphism class of the subgroup given by a mask"""
        orders = self.orders[subgroup]
        parts = {}
        for p in self._primes():
            counts, k = [1], 1
            while True:
                counts.append(int(np.sum((p**k) % orders == 0)))
                if counts[-1] == counts[-2]:
                    break
                k += 1
            parts[p] = self._type_from_counts(p, counts)
        return AbelianGroup(parts)

    def classify_quotient(self, subgroup):
        """The isomorphism class of the quotient by the subgroup given by a mask"""
        size = int(subgroup.sum())
        parts = {}
        for p in self._primes():
            counts, k = [1], 1
            while True:
                counts.append(int(np.sum(subgroup[self.multiple(p**k)])) // size)
                if counts[-1] == counts[-2]:
                    break
                k += 1
            parts[p] = self._type_from_counts(p, counts)
        return AbelianGroup(parts)


def brute_force_subgroup_quotient_oracle(g, sub, max_order=None):
    """Search an explicit model of g for subgroups isomorphic to sub

    Parameters
    ----------
        g : AbelianGroup
            The ambient group
        sub : AbelianGroup
            The subgroup class to look for
        max_order : int/None
            The largest order of g the search accepts, config.MAX_ORACLE_ORDER if None

    Returns
    -------
        exists : bool
            Whether g has a subgroup isomorphic to sub
        quotients : set of AbelianGroup
            The classes g/N over all subgroups N isomorphic to sub

    Raises
    ------
        OrderBoundError
            Raises an order bound error if the order of g exceeds max_order
    """
    max_order = order_bound(max_order)
    if g.order % sub.order:
        if g.order > max_order:
            raise OrderBoundError(
                f"The group {g} has order {g.order}, above the bound {max_order}"
            )
        return False, set()
    quotients = {
        quotient for subgroup, quotient in subgroup_quotient_pairs(g, max_order) if subgroup == sub
    }
    return bool(quotients), quotients


def subgroup_quotient_pairs(g, max_order=None):
    """Every pair (N, g/N) of classes realised by a subgroup N of g"""
    return _subgroup_quotient_pairs(g, order_bound(max_order))


@lru_cache(maxsize=None)
def _subgroup_quotient_pairs(g, max_order):
    model = GroupModel(g, max_order)
    return frozenset(
        (model.classify(mask), model.classify_quotient(mask)) for mask in model.subgroups()
    )
