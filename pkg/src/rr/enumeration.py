from fractions import Fraction
from math import gcd

from tqdm import tqdm

import config
from rr.basket import Basket
from rr.riemann_roch import genus_contribution


def point_types(bound=config.MIYAOKA_BOUND):
    """Every (r, b) whose single point stays under the Miyaoka bound"""
    return [
        (r, b)
        for r in range(2, config.MAX_BASKET_INDEX + 1)
        if r - Fraction(1, r) < bound
        for b in range(1, r // 2 + 1)
        if gcd(b, r) == 1
    ]


def enumerate_baskets(h0=config.DEFAULT_H0, fano_index=1, progress=False):
    """Every index one basket with positive anticanonical degree under the Miyaoka bound

    The search adds point types in order of decreasing ratio t / (r - 1/r), so
    the remaining Miyaoka budget times the current ratio bounds what the rest
    of the basket can still add to sum n t.

    Parameters
    ----------
        h0 : int
            The value of h^0(-K)
        fano_index : int
            The Fano index, only 1 is enumerated
        progress : bool
            Whether to show a progress bar over the leading point type

    Returns
    -------
        baskets : list of Basket
            Ordered by Miyaoka sum, then by the (r, b, n) entries

    Raises
    ------
        ValueError
            Raises a value error for a Fano index other than 1
    """
    if fano_index != 1:
        raise ValueError(
            f"Only Fano index 1 is enumerated, index {fano_index} baskets are validated as fixtures"
        )
    bound = Fraction(config.MIYAOKA_BOUND)
    target = Fraction(3 - h0)
    types = []
    for r, b in point_types():
        weight = r - Fraction(1, r)
        genus = genus_contribution(r, b)
        types.append((genus / weight, r, b, weight, genus))
    types.sort(key=lambda entry: (-entry[0], entry[1], entry[2]))

    found = []
    counts = {}
    bar = tqdm(desc="Baskets", unit=" baskets", leave=False, disable=not progress)

    def extend(start, weight, genus):
        if genus > target:
            found.append(Basket.from_counts(counts))
            bar.update()
        for position in range(start, len(types)):
            ratio, r, b, point_weight, point_genus = types[position]
            if genus + (bound - weight) * ratio <= target:
                break
            n = 1
            while weight + n * point_weight < bound:
                counts[(r, b)] = n
                extend(position + 1, weight + n * point_weight, genus + n * point_genus)
                n += 1
            counts.pop((r, b), None)

    extend(0, Fraction(0), Fraction(0))
    bar.close()
    return sorted(found, key=Basket.sort_key)


def half_point_baskets(baskets):
    return [basket for basket in baskets if basket.indices == [2]]
