from dataclasses import dataclass, field
from functools import lru_cache

from sympy import divisors

from abelian import AbelianGroup
from catalog import k3_subgroup_classes
from partitions.exact_sequences import extension_exists


@dataclass(frozen=True)
class K3TypeResult:
    """Whether a group is an extension of a K3 group by a cyclic group, with all (m, H)"""

    group: AbelianGroup
    witnesses: tuple = field(default=())

    @property
    def is_k3_type(self):
        return bool(self.witnesses)

    def __bool__(self):
        return self.is_k3_type


@lru_cache(maxsize=None)
def _k3_classes_by_order():
    by_order = {}
    for h in k3_subgroup_classes():
        by_order.setdefault(h.order, []).append(h)
    return {order: sorted(groups) for order, groups in by_order.items()}


@lru_cache(maxsize=None)
def is_k3_type(g):
    """Search every 0 -> Z/m -> g -> H -> 0 with H acting on a K3 surface

    Parameters
    ----------
        g : AbelianGroup
            The group to test

    Returns
    -------
        result : K3TypeResult
            Truthy iff a witness exists; witnesses are (m, H) ordered by m then H
    """
    classes = _k3_classes_by_order()
    witnesses = [
        (m, h)
        for m in divisors(g.order)
        for h in classes.get(g.order // m, [])
        if extension_exists(AbelianGroup.cyclic(m), h, g)
    ]
    return K3TypeResult(g, tuple(witnesses))
