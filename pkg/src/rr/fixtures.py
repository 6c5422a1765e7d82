"""Printed basket tables.

Points are written as they are printed, (n, r, a, w) for n x 1/r(a, r-a, w).
"""
from dataclasses import dataclass, field

from rr.basket import Basket, BasketPoint
from rr.riemann_roch import miyaoka_valid

G842 = "2,4,8"
G633 = "3,3,6"
G4222 = "2,2,2,4"
G22222 = "2,2,2,2,2"


@dataclass(frozen=True)
class BasketRow:
    printed: tuple
    groups: tuple
    note: str = ""
    fano_index: int = 1

    @property
    def basket(self):
        return Basket(BasketPoint.from_weights(r, a, n, w) for n, r, a, w in self.printed)

    @property
    def label(self):
        return " + ".join(f"{n} x 1/{r}({a},{r - a},{w})" for n, r, a, w in self.printed)


def _row(points, groups, note="", fano_index=1):
    return BasketRow(tuple(points), tuple(groups), note, fano_index)


TABLE6 = [
    _row([(2, 10, 3, 1)], [G842]),
    _row([(2, 11, 4, 1)], [G842]),
    _row([(6, 4, 1, 1)], [G842, G633]),
    _row([(2, 9, 2, 1)], [G842]),
    _row([(6, 2, 1, 1), (2, 4, 1, 1)], [G842]),
    _row([(4, 2, 1, 1), (4, 3, 1, 1)], [G4222]),
    _row([(4, 5, 2, 1)], [G842, G4222]),
    _row([(4, 2, 1, 1), (4, 4, 1, 1)], [G842, G4222]),
    _row([(2, 11, 3, 1)], [G842]),
    _row([(8, 3, 1, 1)], [G22222, G4222, G842]),
    _row([(3, 7, 2, 1)], [G633]),
    _row([(3, 7, 3, 1)], [G633]),
    _row([(6, 2, 1, 1), (3, 4, 1, 1)], [G633]),
    _row([(2, 11, 2, 1)], [G842]),
    _row([(8, 2, 1, 1), (2, 4, 1, 1)], [G842]),
    _row([(10, 2, 1, 1), (2, 4, 1, 1)], [G842]),
    _row([(8, 2, 1, 1), (4, 3, 1, 1)], [G4222]),
]

# The argument excluding each group once all points are cyclic quotient points
TABLE10_ARGUMENTS = {
    G842: "orbits of Z/8 x Z/4 x Z/2",
    G633: "quotient by Z/6 x (Z/3)^2",
    G4222: "orbits of Z/4 x (Z/2)^3",
    G22222: "orbits of (Z/2)^5",
}

TABLE10 = [
    _row([(2, 10, 3, 1)], [G842]),
    _row([(2, 11, 4, 1)], [G842]),
    _row([(6, 4, 1, 1)], [G633]),
    _row([(2, 9, 2, 1)], [G842]),
    _row([(4, 2, 1, 1), (4, 3, 1, 1)], [G4222]),
    _row([(4, 5, 2, 1)], [G842, G4222]),
    _row([(4, 2, 1, 1), (4, 4, 1, 1)], [G4222]),
    _row([(2, 11, 3, 1)], [G842]),
    _row([(8, 3, 1, 1)], [G22222, G4222, G842]),
    _row([(3, 7, 2, 1)], [G633]),
    _row([(3, 7, 3, 1)], [G633]),
    _row([(2, 11, 2, 1)], [G842]),
    _row([(8, 2, 1, 1), (4, 3, 1, 1)], [G4222]),
]

# Baskets admitting a grouping with a non-cyclic point, with the singularities
# as printed. The group column for 4 x 1/2 + 4 x 1/4 omits
# Z/4 x (Z/2)^3, which 4 x cAx/4 also allows, and the 1/5 row prints cA/4.
TABLE11 = [
    _row([(6, 4, 1, 1)], [G842, G633], "2 x cA/4 or 3 x cA/4"),
    _row([(4, 5, 2, 1)], [G842], "2 x cA/4"),
    _row([(8, 3, 1, 1)], [G842, G4222], "4 x cA/3 or 4 x cD/3"),
    _row([(8, 2, 1, 1), (2, 4, 1, 1)], [G842], "2 x cAx/4"),
    _row([(10, 2, 1, 1), (2, 4, 1, 1)], [G842], "2 x cAx/4"),
    _row([(8, 2, 1, 1), (4, 3, 1, 1)], [G4222], "4 x cA/2, 4 x 1/3(1,2,1)"),
    _row([(6, 2, 1, 1), (2, 4, 1, 1)], [G842], "2 x cAx/4"),
    _row([(4, 2, 1, 1), (4, 4, 1, 1)], [G842], "4 x cAx/4"),
    _row([(6, 2, 1, 1), (3, 4, 1, 1)], [G633], "3 x cAx/4"),
]

HIGHER_INDEX = [
    _row([(2, 3, 1, 2), (2, 7, 3, 2)], [G842], fano_index=2),
    _row([(4, 3, 1, 2), (2, 5, 1, 2)], [G842], fano_index=2),
    _row([(2, 5, 2, 2), (2, 7, 1, 2)], [G842], fano_index=2),
    _row([(2, 11, 4, 2)], [G842], fano_index=2),
    _row([(2, 5, 1, 2), (2, 7, 3, 2)], [G842], fano_index=2),
    _row([(3, 3, 1, 2), (3, 5, 1, 2)], [G633], fano_index=2),
    _row([(3, 7, 3, 2)], [G633], fano_index=2),
    _row([(2, 3, 1, 2), (2, 9, 4, 2)], [G842], fano_index=2),
    _row([(4, 5, 1, 3)], [G842, G4222], fano_index=3),
    _row([(2, 2, 1, 1), (2, 8, 1, 3)], [G842], fano_index=3),
    _row([(4, 2, 1, 1), (2, 7, 1, 3)], [G842], fano_index=3),
    _row([(2, 9, 2, 4)], [G842], fano_index=4),
    _row([(3, 7, 1, 4)], [G633], fano_index=4),
    _row([(4, 3, 1, 1), (2, 5, 1, 4)], [G842], fano_index=4),
    _row([(2, 5, 2, 4), (2, 7, 1, 4)], [G842], fano_index=4),
]


@dataclass
class FixtureReport:
    basket: Basket
    miyaoka_ok: bool
    points_ok: bool
    messages: list = field(default_factory=list)

    @property
    def valid(self):
        return self.miyaoka_ok and self.points_ok


def validate_fixture(basket):
    """Check a printed basket against the Miyaoka bound and the point invariants

    Parameters
    ----------
        basket : Basket/BasketRow
            The basket, or a printed row whose weights are checked as well

    Returns
    -------
        report : FixtureReport
            The outcome of each check with a message per failure
    """
    messages = []
    points_ok = True
    if isinstance(basket, BasketRow):
        for n, r, a, w in basket.printed:
            try:
                BasketPoint.from_weights(r, a, n, w)
            except ValueError as error:
                points_ok = False
                messages.append(str(error))
        if not points_ok:
            return FixtureReport(None, False, False, messages)
        basket = basket.basket
    miyaoka_ok = miyaoka_valid(basket)
    if not miyaoka_ok:
        messages.append(f"Miyaoka sum {basket.miyaoka_sum} is not below 24")
    return FixtureReport(basket, miyaoka_ok, points_ok, messages)
