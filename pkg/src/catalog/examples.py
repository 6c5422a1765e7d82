from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd

from abelian import AbelianGroup, fermat_group


@dataclass(frozen=True)
class FermatExample:
    """A Fermat hypersurface or complete intersection with its diagonal group

    expected is the group the diagonal action gives; printed differs from it
    only where the source table disagrees with the computation.
    """

    label: str
    weights: tuple
    degrees: tuple
    expected: str
    printed: str = None
    singularities: str = ""

    @property
    def degree(self):
        return reduce(gcd, self.degrees)

    @property
    def weight_pairs(self):
        return sorted(Counter(self.weights).items())

    def group(self):
        return fermat_group(self.weight_pairs, self.degree)

    def __str__(self):
        degrees = ",".join(str(d) for d in self.degrees)
        weights = ",".join(str(a) for a in self.weights)
        return f"X_{degrees} in P({weights})"


FERMAT_EXAMPLES = [
    FermatExample("fano-quartic", (1, 1, 1, 1, 1), (4,), "4,4,4,4"),
    FermatExample("fano-sextic", (1, 1, 1, 1, 3), (6,), "2,6,6,6"),
    FermatExample("fano-sextic-singular", (1, 1, 1, 2, 2), (6,), "3,3,6,6", singularities="3 x 1/2(1,1,1)"),
    FermatExample("fano-octic", (1, 1, 1, 2, 4), (8,), "2,4,8,8", singularities="2 x 1/2(1,1,1)"),
    FermatExample("fano-three-quadrics", (1,) * 7, (2, 2, 2), "2,2,2,2,2,2"),
    FermatExample("fano-two-quartics", (1, 1, 1, 2, 2, 2), (4, 4), "2,2,2,4,4"),
    FermatExample("k3-sextic", (1, 1, 1, 3), (6,), "2,6,6"),
    FermatExample("k3-quartic", (1, 1, 1, 1), (4,), "4,4,4"),
    FermatExample("k3-three-quadrics", (1,) * 6, (2, 2, 2), "2,2,2,2,2"),
    FermatExample("k3-two-quartics", (1, 1, 2, 2, 2), (4, 4), "2,2,2,4", singularities="4A1"),
    FermatExample("k3-octic", (1, 1, 2, 4), (8,), "2,4,8", singularities="2A1"),
    FermatExample("k3-sextic-singular", (1, 1, 2, 2), (6,), "3,3,6", singularities="3A1"),
    FermatExample("k3-dodecic-1344", (1, 3, 4, 4), (12,), "3,12", singularities="3A3"),
    FermatExample("k3-dodecic-1236", (1, 2, 3, 6), (12,), "2,2,12", singularities="2A1+2A2"),
    FermatExample("k3-dodecic-2334", (2, 3, 3, 4), (12,), "2,12", printed="3,4,4", singularities="3A1+4A2"),
    FermatExample("k3-two-sextics-12333", (1, 2, 3, 3, 3), (6, 6), "2,2,6", singularities="4A2"),
    FermatExample("k3-two-sextics-22233", (2, 2, 2, 3, 3), (6, 6), "3,6", singularities="9A1"),
]


def fermat_examples():
    return list(FERMAT_EXAMPLES)


def _family(*parts):
    def build(*parameters):
        factors = [part(*parameters) if callable(part) else part for part in parts]
        return AbelianGroup.from_factors(factors)

    return build


# (label, number of parameters, builder)
TABLE1 = [
    ("Z/k x Z/l x Z/m", 3, _family(lambda k, l, m: k, lambda k, l, m: l, lambda k, l, m: m)),
    ("Z/2k x (Z/4)^2 x Z/2", 1, _family(lambda k: 2 * k, 4, 4, 2)),
    ("Z/3k x (Z/3)^3", 1, _family(lambda k: 3 * k, 3, 3, 3)),
    ("Z/2k x Z/2l x (Z/2)^2", 2, _family(lambda k, l: 2 * k, lambda k, l: 2 * l, 2, 2)),
    ("Z/2n x (Z/2)^4", 1, _family(lambda n: 2 * n, 2, 2, 2, 2)),
    ("(Z/4)^2 x (Z/2)^3", 0, _family(4, 4, 2, 2, 2)),
    ("(Z/2)^6", 0, _family(2, 2, 2, 2, 2, 2)),
    ("(Z/4)^4", 0, _family(4, 4, 4, 4)),
    ("(Z/6)^3 x Z/2", 0, _family(6, 6, 6, 2)),
    ("(Z/6)^2 x (Z/3)^2", 0, _family(6, 6, 3, 3)),
    ("(Z/8)^2 x Z/4 x Z/2", 0, _family(8, 8, 4, 2)),
]

EXCEPTIONAL_GROUPS = [build() for _, _, build in TABLE1[7:]]


def table1_members(values=(1, 2, 3)):
    """Every classification row instantiated with parameters drawn from values

    Returns
    -------
        members : list of (int, str, tuple, AbelianGroup)
            Row number, row label, parameters and resulting group
    """
    members = []
    for row, (label, arity, build) in enumerate(TABLE1, start=1):
        for parameters in product(values, repeat=arity):
            members.append((row, label, parameters, build(*parameters)))
    return members
