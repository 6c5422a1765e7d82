from abelian.oracle import GroupModel


def stabilizer_splits(h, n, max_order=None):
    """The (H_x, H_Sigma) pairs for a transitive orbit of n points

    An abelian group acts on a transitive orbit through a quotient H_Sigma
    acting regularly, so |H_Sigma| = n and the stabilizer H_x is the kernel.

    Parameters
    ----------
        h : AbelianGroup
            The acting group
        n : int
            The orbit size
        max_order : int/None
            The largest group order the subgroup search accepts, config.MAX_ORACLE_ORDER if None

    Returns
    -------
        splits : list of (AbelianGroup, AbelianGroup)
            The distinct (kernel, quotient) class pairs, sorted

    Raises
    ------
        ValueError
            Raises a value error if n does not divide the order of h
    """
    if n < 1 or h.order % n:
        raise ValueError(f"An orbit of {n} points is impossible for a group of order {h.order}")
    model = GroupModel(h, max_order)
    kernel_order = h.order // n
    splits = {
        (model.classify(mask), model.classify_quotient(mask))
        for mask in model.subgroups(max_order=kernel_order)
        if mask.sum() == kernel_order
    }
    return sorted(splits)
