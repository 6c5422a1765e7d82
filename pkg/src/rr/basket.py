from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import config
from rr.riemann_roch import anticanonical_cube


@dataclass(frozen=True, order=True)
class BasketPoint:
    """n copies of the terminal quotient point 1/r(1,-1,b)"""

    r: int
    b: int
    n: int = 1
    third_weight: int = field(default=None, compare=False)

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"A basket point has index at least 2, got {self.r}")
        if not 0 < self.b or 2 * self.b > self.r or gcd(self.b, self.r) != 1:
            raise ValueError(
                f"1/{self.r}(1,-1,{self.b}) needs 0 < b <= r/2 and gcd(b, r) = 1"
            )
        if self.n < 1:
            raise ValueError(f"A multiplicity is at least 1, got {self.n}")

    @classmethod
    def from_weights(cls, r, a, n=1, third_weight=None):
        """The point printed as 1/r(a, r-a, w), rewritten as 1/r(1,-1,b)

        Multiplying the weights by the inverse of a gives 1/r(1, -1, a^-1 w),
        so b is a^-1 mod r up to sign.
        """
        if gcd(a, r) != 1:
            raise ValueError(f"The weight {a} is not a unit modulo {r}")
        inverse = pow(a, -1, r)
        return cls(r, min(inverse, r - inverse), n, third_weight)

    @property
    def type(self):
        return self.r, self.b

    @property
    def miyaoka_term(self):
        return self.n * (self.r - Fraction(1, self.r))

    def __str__(self):
        return f"{self.n} x 1/{self.r}(1,-1,{self.b})"


class Basket:
    def __init__(self, points=()):
        """A basket of terminal quotient points, with equal types merged

        Parameters
        ----------
            points : iterable of BasketPoint or (r, b, n)
                The points; tuples are turned into points
        """
        counts = Counter()
        third_weights = {}
        for point in points:
            if not isinstance(point, BasketPoint):
                point = BasketPoint(*point)
            counts[point.type] += point.n
            if point.third_weight is not None:
                third_weights[point.type] = point.third_weight
        self._points = tuple(
            BasketPoint(r, b, n, third_weights.get((r, b)))
            for (r, b), n in sorted(counts.items())
        )

    @classmethod
    def from_counts(cls, counts):
        """A basket from a map (r, b) -> multiplicity"""
        return cls(BasketPoint(r, b, n) for (r, b), n in counts.items() if n)

    @classmethod
    def from_json(cls, records):
        return cls(BasketPoint(record["r"], record["b"], record["n"]) for record in records)

    @property
    def points(self):
        return self._points

    @property
    def counts(self):
        return {point.type: point.n for point in self._points}

    @property
    def total_point_count(self):
        return sum(point.n for point in self._points)

    @property
    def miyaoka_sum(self):
        return sum((point.miyaoka_term for point in self._points), Fraction(0))

    @property
    def indices(self):
        return sorted({point.r for point in self._points})

    def anticanonical_cube(self, h0=config.DEFAULT_H0):
        return anticanonical_cube(self, h0)

    def sort_key(self):
        return self.miyaoka_sum, tuple((p.r, p.b, p.n) for p in self._points)

    def to_json(self):
        return [{"r": p.r, "b": p.b, "n": p.n} for p in self._points]

    def __iter__(self):
        return iter(self._points)

    def __len__(self):
        return len(self._points)

    def __eq__(self, other):
        return isinstance(other, Basket) and self.counts == other.counts

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))

    def __str__(self):
        if not self._points:
            return "empty"
        return ", ".join(str(point) for point in self._points)

    def __repr__(self):
        return f"Basket({self.to_json()})"
