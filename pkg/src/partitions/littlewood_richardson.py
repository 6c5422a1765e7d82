from functools import lru_cache

from partitions.partition import Partition


def lr_coefficient(lam, nu, mu):
    """The Littlewood-Richardson coefficient c^mu_{lam,nu}

    Counts the semistandard skew tableaux of shape mu/lam and content nu whose
    reverse reading word (rows top to bottom, each row right to left) is a
    lattice word.

    Parameters
    ----------
        lam : Partition
            The partition removed from mu
        nu : Partition
            The content of the tableaux
        mu : Partition
            The outer shape

    Returns
    -------
        coefficient : int
            The number of such tableaux, zero when the sizes do not add up or
            lam does not fit inside mu
    """
    if mu.size != lam.size + nu.size or not mu.contains(lam):
        return 0
    if not mu.contains(nu):
        return 0
    return _count_tableaux(mu.parts, lam.parts, nu.parts)


@lru_cache(maxsize=None)
def _count_tableaux(mu, lam, nu):
    cells = [
        (i, j)
        for i, row in enumerate(mu)
        for j in reversed(range(lam[i] if i < len(lam) else 0, row))
    ]
    if not cells:
        return 1

    filling = {}
    counts = [0] * (len(nu) + 1)

    def place(index):
        if index == len(cells):
            return 1
        i, j = cells[index]
        largest = filling.get((i, j + 1), len(nu))
        smallest = filling.get((i - 1, j), 0) + 1
        found = 0
        for value in range(smallest, largest + 1):
            if counts[value] == nu[value - 1]:
                continue
            if value > 1 and counts[value] == counts[value - 1]:
                continue
            counts[value] += 1
            filling[(i, j)] = value
            found += place(index + 1)
            del filling[(i, j)]
            counts[value] -= 1
        return found

    return place(0)


def lr_support(lam, nu):
    """All mu with a nonzero coefficient c^mu_{lam,nu}, with their coefficients"""
    size = lam.size + nu.size
    return {
        mu: coefficient
        for mu in Partition.all_of_size(size, max_length=lam.length + nu.length)
        if (coefficient := lr_coefficient(lam, nu, mu))
    }
