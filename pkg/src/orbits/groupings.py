from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from math import gcd

from sympy import divisors

MODES = ("any", "cyclic", "du_val")

CAX4_CENTER = (4, 1)
CAX4_HALF = (2, 1)


@dataclass(frozen=True, order=True)
class PointClass:
    """k actual points of X, each carrying the same sub-basket

    point_basket is a tuple of ((r, b), c) pairs. A single pair with c = 1 is a
    cyclic quotient point; c > 1 copies of one type, or 1/4 together with
    j half points (cAx/4), make a non-cyclic point.
    """

    count: int
    point_basket: tuple
    du_val_hint: object = field(default=None, compare=False)

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"A point class has at least one point, got {self.count}")

    @property
    def index(self):
        return max(r for (r, _), _ in self.point_basket)

    @property
    def basket_points_per_point(self):
        return sum(c for _, c in self.point_basket)

    @property
    def is_cyclic(self):
        return self.basket_points_per_point == 1

    @property
    def is_cax4(self):
        return len(self.point_basket) == 2

    def label(self):
        if self.is_cyclic:
            (r, b), _ = self.point_basket[0]
            return f"{self.count} x 1/{r}(1,-1,{b})"
        if self.is_cax4:
            return f"{self.count} x cAx/4"
        (r, b), c = self.point_basket[0]
        return f"{self.count} x [{c} x 1/{r}(1,-1,{b})]"


@dataclass(frozen=True)
class PointConfiguration:
    classes: tuple

    @property
    def counts(self):
        return [point_class.count for point_class in self.classes]

    @property
    def is_all_cyclic(self):
        return all(point_class.is_cyclic for point_class in self.classes)

    @property
    def has_non_cyclic(self):
        return not self.is_all_cyclic

    def __str__(self):
        if not self.classes:
            return "smooth"
        return ", ".join(point_class.label() for point_class in self.classes)


def coprime_filter(configuration):
    """Whether the gcd of the class counts is divisible by 2 or 3

    When it is not, the group is of product type.
    """
    common = reduce(gcd, configuration.counts, 0)
    return common % 2 == 0 or common % 3 == 0


def _distinct_splits(n, cyclic_only=False):
    """Ways to write n = sum c k with distinct c, as tuples of (c, k)"""
    if cyclic_only:
        return [((1, n),)] if n else [()]

    def fill(remaining, smallest):
        if remaining == 0:
            yield ()
            return
        for c in range(smallest, remaining + 1):
            for k in range(1, remaining // c + 1):
                for rest in fill(remaining - c * k, c + 1):
                    yield ((c, k),) + rest

    return list(fill(n, 1))


def _cax4_choices(centers, halves):
    """Ways to form cAx/4 classes (j, k): k points each of 1/4 plus j half points"""

    def fill(j, left_centers, left_halves):
        if j > left_halves or left_centers == 0:
            yield ()
            return
        yield from fill(j + 1, left_centers, left_halves)
        for k in range(1, min(left_centers, left_halves // j) + 1):
            for rest in fill(j + 1, left_centers - k, left_halves - j * k):
                yield ((j, k),) + rest

    return list(fill(1, centers, halves))


def enumerate_groupings(basket, mode="any"):
    """Every way to gather the basket points into actual points of X

    Parameters
    ----------
        basket : Basket
            The basket
        mode : str
            "cyclic" keeps only cyclic quotient points, "any" and "du_val"
            allow every grouping

    Returns
    -------
        groupings : list of PointConfiguration
            In a fixed order
    """
    if mode not in MODES:
        raise ValueError(f"Unknown grouping mode '{mode}', use one of {MODES}")
    cyclic_only = mode == "cyclic"
    counts = basket.counts
    if cyclic_only or CAX4_CENTER not in counts or CAX4_HALF not in counts:
        mixed_options = [()]
    else:
        mixed_options = _cax4_choices(counts[CAX4_CENTER], counts[CAX4_HALF])

    groupings = []
    for mixed in mixed_options:
        remaining = dict(counts)
        mixed_classes = []
        for j, k in mixed:
            remaining[CAX4_CENTER] -= k
            remaining[CAX4_HALF] -= j * k
            mixed_classes.append(PointClass(k, ((CAX4_HALF, j), (CAX4_CENTER, 1))))
        types = sorted(point_type for point_type, n in remaining.items() if n)
        per_type = [_distinct_splits(remaining[t], cyclic_only) for t in types]
        for choice in product(*per_type):
            classes = list(mixed_classes)
            for point_type, splits in zip(types, choice):
                classes.extend(PointClass(k, ((point_type, c),)) for c, k in splits)
            groupings.append(PointConfiguration(tuple(sorted(classes))))
    return groupings


def factorizations(total):
    """(point_count, basket_points_per_point) pairs with product total"""
    return [(total // per_point, int(per_point)) for per_point in divisors(total)]
