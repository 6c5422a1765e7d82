from math import gcd

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from abelian.group import AbelianGroup


def group_from_relations(relations):
    """The abelian group Z^n / (row span of relations)

    Parameters
    ----------
        relations : list of list of int
            The relation matrix, one relation per row, n columns

    Returns
    -------
        group : AbelianGroup
            The cokernel, assumed finite
    """
    matrix = Matrix(relations)
    factors = [abs(int(d)) for d in invariant_factors(matrix, domain=ZZ)]
    assert all(factors), "The relations do not present a finite group"
    assert len(factors) == matrix.cols, "The relations do not present a finite group"
    return AbelianGroup.from_factors(factors)


def element_order(moduli, element):
    """Order of an element of Z/n_1 x ... x Z/n_k given by its residues"""
    order = 1
    for modulus, residue in zip(moduli, element):
        component = modulus // gcd(modulus, residue)
        order = order * component // gcd(order, component)
    return order


def quotient_by_cyclic(moduli, element):
    """The quotient of Z/n_1 x ... x Z/n_k by the cyclic subgroup an element generates

    Parameters
    ----------
        moduli : list of int
            The orders n_i of the generators of the explicit presentation
        element : list of int
            The residues of the element, one per generator

    Returns
    -------
        quotient : AbelianGroup
            The isomorphism class of the quotient

    Raises
    ------
        ValueError
            Raises a value error if the element does not match the presentation
    """
    moduli = [int(n) for n in moduli]
    element = [int(x) for x in element]
    if any(n < 1 for n in moduli):
        raise ValueError(f"Generator orders must be positive, got {moduli}")
    if len(element) != len(moduli):
        raise ValueError(
            f"The element {element} has {len(element)} residues but the group has {len(moduli)} generators"
        )
    for n, x in zip(moduli, element):
        if not 0 <= x < n:
            raise ValueError(f"Residue {x} is out of range for Z/{n}")
    if not moduli:
        return AbelianGroup()

    relations = [
        [n if i == j else 0 for j in range(len(moduli))] for i, n in enumerate(moduli)
    ]
    relations.append(element)
    return group_from_relations(relations)


def fermat_group(weights, degree):
    """The diagonal automorphism group of a Fermat hypersurface modulo scalars

    Parameters
    ----------
        weights : list of (int, int)
            Pairs (a_i, r_i): the weight a_i occurring r_i times
        degree : int
            The degree d, or the gcd of the degrees for a complete intersection

    Returns
    -------
        group : AbelianGroup
            (prod (Z/(d/a_i))^{r_i}) / (Z/d), the quotient by the all ones element

    Raises
    ------
        ValueError
            Raises a value error if a weight does not divide the degree
    """
    moduli = []
    for a, repeat in weights:
        if a < 1 or repeat < 0:
            raise ValueError(f"Weights must be positive, got ({a}, {repeat})")
        if degree % a:
            raise ValueError(f"The weight {a} does not divide the degree {degree}")
        moduli.extend([degree // a] * repeat)
    return quotient_by_cyclic(moduli, [1 % n for n in moduli])
