from dataclasses import dataclass
from enum import Enum

from sympy import divisors

import config
from abelian import AbelianGroup
from catalog import EXCEPTIONAL_GROUPS, exceptional_entry, exceptional_six
from extensions.k3_type import is_k3_type
from extensions.product_type import is_product_type
from partitions.exact_sequences import enumerate_extensions


class Verdict(Enum):
    PRODUCT_TYPE = "ProductType"
    K3_EXCEPTIONAL = "K3Exceptional"
    UNRESOLVED = "Unresolved"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SplitCase:
    """Non-split extensions of rank above 3, before and after removing product type groups"""

    h: AbelianGroup
    m: int
    candidates: tuple
    survivors: tuple


def lemma_g_splits_table(h, m):
    """Extensions G of h by Z/m that are not Z/m x h and have rank above 3

    Parameters
    ----------
        h : AbelianGroup
            One of the six K3 groups outside the plane Cremona group
        m : int
            Order of the cyclic kernel, one of 1, 2, 3, 4, 6, 8

    Returns
    -------
        case : SplitCase
            The candidates and those of them that are not of product type

    Raises
    ------
        ValueError
            Raises a value error if h or m is outside the allowed values
    """
    exceptional_entry(h)
    if m not in config.NONSYMPLECTIC_ORDERS:
        raise ValueError(f"m must be one of {config.NONSYMPLECTIC_ORDERS}, got {m}")
    cyclic = AbelianGroup.cyclic(m)
    split = cyclic * h
    candidates = tuple(
        g for g in enumerate_extensions(cyclic, h) if g != split and g.rank > 3
    )
    survivors = tuple(g for g in candidates if not is_product_type(g))
    return SplitCase(h, m, candidates, survivors)


@dataclass(frozen=True)
class LargeH0Case:
    """For H: the cyclic groups Z/c in H that Z/m can map onto, and the largest G"""

    h: AbelianGroup
    m_sets: dict
    maximal: AbelianGroup

    @property
    def cyclic_orders(self):
        return sorted(self.m_sets)

    @property
    def maximal_is_product_type(self):
        return is_product_type(self.maximal)


def h0geq2_classification():
    """The bound on G when |-K| has two invariant K3 surfaces, for each of the six H

    Z/m embeds in a second K3 group, so its image C' in H is cyclic of an order
    c allowed for non-symplectic actions, and m divides c. The largest
    possibility is G = Z/c_max x H.

    Returns
    -------
        cases : dict
            Map from H to its LargeH0Case, in catalog order
    """
    cases = {}
    for entry in exceptional_six():
        h = entry.group
        orders = [
            c for c in config.NONSYMPLECTIC_ORDERS if AbelianGroup.cyclic(c).embeds_in(h)
        ]
        m_sets = {c: [int(d) for d in divisors(c)] for c in orders}
        maximal = AbelianGroup.cyclic(max(orders)) * h
        cases[h] = LargeH0Case(h, m_sets, maximal)
    return cases


def non_product_maxima():
    """The largest groups left by the classification that are not of product type"""
    return sorted(
        case.maximal
        for case in h0geq2_classification().values()
        if not case.maximal_is_product_type
    )


@dataclass(frozen=True)
class Classification:
    group: AbelianGroup
    verdict: Verdict
    witnesses: tuple = ()

    def to_json(self):
        return {
            "group": str(self.group),
            "verdict": str(self.verdict),
            "witnesses": [{"m": m, "H": str(h)} for m, h in self.witnesses],
        }


def classify_group(g):
    """Product type, one of the four exceptional K3 type groups, or unresolved"""
    if is_product_type(g):
        return Classification(g, Verdict.PRODUCT_TYPE)
    k3 = is_k3_type(g)
    if k3 and g in EXCEPTIONAL_GROUPS:
        return Classification(g, Verdict.K3_EXCEPTIONAL, k3.witnesses)
    return Classification(g, Verdict.UNRESOLVED, k3.witnesses)
