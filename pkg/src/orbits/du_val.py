import config
from catalog import DuValType


def cyclic_du_val_type(r):
    """A general anticanonical surface through a cyclic point of index r has an A_{r-1} point"""
    if r < 2:
        raise ValueError(f"A non-Gorenstein point has index at least 2, got {r}")
    return DuValType("A", r - 1)


def minimal_du_val_type(point_class):
    """The cheapest du Val point an actual point of the class leaves on the K3 surface

    A non-cyclic point of index r has a non-universal cyclic cover of degree r
    of its link, which A_{2r-1} is the smallest type to admit.
    """
    if point_class.is_cyclic:
        return cyclic_du_val_type(point_class.index)
    return DuValType("A", 2 * point_class.index - 1)


def picard_bound_feasible(types):
    """Whether the exceptional curves plus a polarisation fit in Picard rank 20"""
    return sum(t.curve_count for t in types) + 1 <= config.PICARD_BOUND


def configuration_du_val_types(configuration):
    return [
        minimal_du_val_type(point_class)
        for point_class in configuration.classes
        for _ in range(point_class.count)
    ]
