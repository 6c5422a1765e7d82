"""Littlewood-Richardson coefficients from the Jacobi-Trudi determinant.

s_nu = det(h_{nu_i - i + j}), so s_lam s_nu is a signed sum of products
s_lam h_a1 ... h_ak, each expanded with the Pieri rule.
"""
from collections import Counter
from itertools import permutations


def _sign(permutation):
    sign = 1
    seen = set()
    for start in range(len(permutation)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = permutation[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def horizontal_strips(lam, k):
    """Partitions mu containing lam with mu / lam a horizontal strip of k boxes"""
    lam = list(lam)
    rows = lam + [0]

    def fill(i, left):
        if i == len(rows):
            if left == 0:
                yield ()
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for added in range(cap, -1, -1):
            for rest in fill(i + 1, left - added):
                yield (rows[i] + added,) + rest

    for mu in fill(0, k):
        yield tuple(part for part in mu if part)


def pieri(expansion, k):
    result = Counter()
    for lam, coefficient in expansion.items():
        for mu in horizontal_strips(lam, k):
            result[mu] += coefficient
    return result


def lr_product(lam, nu):
    """The expansion of s_lam s_nu as a map mu -> coefficient"""
    lam, nu = tuple(lam), tuple(nu)
    total = Counter()
    n = len(nu)
    for permutation in permutations(range(n)):
        degrees = [nu[i] - i + permutation[i] for i in range(n)]
        if any(d < 0 for d in degrees):
            continue
        expansion = Counter({lam: 1})
        for d in degrees:
            expansion = pieri(expansion, d)
        sign = _sign(permutation)
        for mu, coefficient in expansion.items():
            total[mu] += sign * coefficient
    return {mu: c for mu, c in total.items() if c}
