from dataclasses import dataclass

from abelian import AbelianGroup
from catalog import DuValType, exceptional_entry


@dataclass(frozen=True)
class OrbitConstraints:
    """What the orbits of G on the non-Gorenstein points of X may look like

    Parameters
    ----------
        forbid_singular : bool
            X must be smooth
        single_class : bool
            All points form one orbit, so a single class of points
        count_divisor : int
            Every class count is a multiple of this
        count_divides : int/None
            The single orbit length divides this
        du_val_types : tuple/None
            The allowed du Val types on the invariant K3 surface, None for any
    """

    forbid_singular: bool = False
    single_class: bool = False
    count_divisor: int = 1
    count_divides: int = None
    du_val_types: tuple = None

    @property
    def allows_non_cyclic(self):
        """Non-cyclic quotient points give types other than A1 and A2"""
        return self.du_val_types is None

    def admits_counts(self, counts):
        """Whether class counts k_1, ..., k_l are compatible with the orbit rules"""
        counts = list(counts)
        if self.forbid_singular:
            return not counts
        if self.single_class and len(counts) > 1:
            return False
        if any(k % self.count_divisor for k in counts):
            return False
        if self.count_divides is not None and any(self.count_divides % k for k in counts):
            return False
        return True


_SMALL_TYPES = (DuValType("A", 1), DuValType("A", 2))

_CONSTRAINTS = {
    "4,4,4": OrbitConstraints(forbid_singular=True),
    "2,6,6": OrbitConstraints(forbid_singular=True),
    "2,4,8": OrbitConstraints(
        single_class=True, count_divisor=2, count_divides=64, du_val_types=_SMALL_TYPES
    ),
    "3,3,6": OrbitConstraints(
        single_class=True, count_divisor=3, count_divides=54, du_val_types=_SMALL_TYPES
    ),
    "2,2,2,2,2": OrbitConstraints(count_divisor=8),
    "2,2,2,4": OrbitConstraints(count_divisor=4),
}


def orbit_constraints(h):
    """The orbit rules for one of the six K3 groups

    Raises
    ------
        ValueError
            Raises a value error if h is not one of the six groups
    """
    exceptional_entry(h)
    return _CONSTRAINTS[str(h)]


def constrained_groups():
    return [AbelianGroup.parse(text) for text in _CONSTRAINTS]
