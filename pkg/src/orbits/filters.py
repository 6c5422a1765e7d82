from dataclasses import dataclass

from orbits.constraints import constrained_groups, orbit_constraints
from orbits.du_val import (
    configuration_du_val_types,
    minimal_du_val_type,
    picard_bound_feasible,
)
from orbits.groupings import (
    MODES,
    PointClass,
    coprime_filter,
    enumerate_groupings,
    factorizations,
)
from rr import Basket, BasketPoint
from rr.riemann_roch import anticanonical_cube


def _du_val_allowed(constraints, point_class):
    if point_class.is_cyclic or constraints.allows_non_cyclic:
        return True
    return minimal_du_val_type(point_class) in constraints.du_val_types


def admissible_groupings(h, r, total_basket_points):
    """The ways total basket points of index r can form actual points under the orbits of h

    Parameters
    ----------
        h : AbelianGroup
            One of the six K3 groups
        r : int
            The index of the basket points
        total_basket_points : int
            How many basket points of that index there are

    Returns
    -------
        groupings : list of (int, int)
            Pairs (point_count, basket_points_per_point)
    """
    constraints = orbit_constraints(h)
    admissible = []
    for count, per_point in factorizations(total_basket_points):
        point_class = PointClass(count, (((r, 1), per_point),))
        if not constraints.admits_counts([count]):
            continue
        if not _du_val_allowed(constraints, point_class):
            continue
        admissible.append((count, per_point))
    return admissible


def grouping_admissible(h, configuration, mode="any"):
    """Whether h can act with these point classes as unions of orbits"""
    constraints = orbit_constraints(h)
    if not constraints.admits_counts(configuration.counts):
        return False
    if mode == "du_val" and not all(
        _du_val_allowed(constraints, point_class) for point_class in configuration.classes
    ):
        return False
    return coprime_filter(configuration)


def admissible_configurations(h, basket, mode="any"):
    return [
        configuration
        for configuration in enumerate_groupings(basket, mode)
        if grouping_admissible(h, configuration, mode)
    ]


def filter_basket_table(h, baskets, mode="any"):
    """Keep the baskets h can act on, with the groupings that allow it

    Parameters
    ----------
        h : AbelianGroup
            One of the six K3 groups
        baskets : list of Basket
            The baskets to filter
        mode : str
            "any", "cyclic" (all points are cyclic quotient points) or
            "du_val" (non-cyclic points also have to leave allowed du Val points)

    Returns
    -------
        kept : list of (Basket, list of PointConfiguration)
            The kept baskets in input order
    """
    if mode not in MODES:
        raise ValueError(f"Unknown grouping mode '{mode}', use one of {MODES}")
    kept = []
    for basket in baskets:
        configurations = admissible_configurations(h, basket, mode)
        if configurations:
            kept.append((basket, configurations))
    return kept


def possible_groups(basket, mode="any", non_cyclic_only=False):
    """The six K3 groups that admit the basket, in catalog order"""
    groups = []
    for h in constrained_groups():
        configurations = admissible_configurations(h, basket, mode)
        if non_cyclic_only:
            configurations = [c for c in configurations if c.has_non_cyclic]
        if configurations:
            groups.append(h)
    return groups


def terminal_endgame(h, basket):
    """Groupings with a non-cyclic point that survive the du Val and Picard rank checks

    Returns
    -------
        survivors : list of PointConfiguration
            Empty when no such action of h is possible
    """
    return [
        configuration
        for configuration in admissible_configurations(h, basket, "du_val")
        if configuration.has_non_cyclic
        and picard_bound_feasible(configuration_du_val_types(configuration))
    ]


@dataclass(frozen=True)
class HalfPointRow:
    n: int
    cube: object
    miyaoka_sum: object
    groups: tuple


def half_point_table(counts=range(9, 16), h0=1):
    """For N half points: the anticanonical degree, the Miyaoka sum and the groups allowed"""
    rows = []
    for n in counts:
        basket = Basket([BasketPoint(2, 1, n)])
        rows.append(
            HalfPointRow(
                n,
                anticanonical_cube(basket, h0),
                basket.miyaoka_sum,
                tuple(possible_groups(basket)),
            )
        )
    return rows
