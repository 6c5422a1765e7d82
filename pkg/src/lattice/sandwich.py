from dataclasses import dataclass
from math import isqrt

from lattice.lattice import Lattice


def finite_index_compatible(det_sub, det_sup):
    """Whether det_sub / det_sup is a positive square, as for a finite index sublattice"""
    if det_sup == 0 or det_sub % det_sup:
        return False
    quotient = det_sub // det_sup
    return quotient > 0 and isqrt(quotient) ** 2 == quotient


@dataclass(frozen=True)
class DiagonalFamily:
    """The middle lattices diag(stride * j, tail) for j = 1, 2, ..."""

    stride: int
    tail: int

    def __post_init__(self):
        if self.stride < 1:
            raise ValueError(f"The stride must be positive, got {self.stride}")
        if self.tail == 0:
            raise ValueError("The tail entry of the middle lattices must be non-zero")

    def member(self, j):
        return Lattice([[self.stride * j, 0], [0, self.tail]])

    def determinant(self, j):
        return self.stride * j * self.tail


@dataclass(frozen=True)
class SandwichResult:
    feasible: bool
    witness: Lattice = None
    a_bound: int = 0

    def __bool__(self):
        return self.feasible


def scale_factor(inner, outer):
    """The k with inner = scale(outer, k)

    Raises
    ------
        ValueError
            Raises a value error if no such k exists
    """
    if inner.rank != outer.rank:
        raise ValueError("The inner and outer lattices have different ranks")
    for k in range(1, _largest_entry(inner) + 2):
        if outer.scale(k) == inner:
            return k
        if k * k * _largest_entry(outer) > _largest_entry(inner):
            break
    raise ValueError(f"{inner.gram} is not a scaled copy of {outer.gram}")


def _largest_entry(l):
    return max(abs(x) for row in l.gram for x in row)


def sandwich_feasible(inner, outer, middle_family):
    """Look for a middle lattice inner <= M <= outer allowed by the discriminants

    A member M of the family is allowed when both inclusions have square
    determinant ratios. Since det(M) divides det(inner), only members with
    |det M| <= |det inner| are tried.

    Parameters
    ----------
        inner : Lattice
            The smallest lattice, a scaled copy of outer
        outer : Lattice
            The largest lattice
        middle_family : DiagonalFamily
            The candidate middle lattices

    Returns
    -------
        result : SandwichResult
            The verdict, the first witness if feasible, and the largest diagonal
            entry stride * j that was tried

    Raises
    ------
        ValueError
            Raises a value error if inner is not a scale of outer
    """
    scale_factor(inner, outer)
    det_inner, det_outer = inner.determinant, outer.determinant
    a_bound = abs(det_inner) // abs(middle_family.tail)
    j = 1
    while middle_family.stride * j <= a_bound:
        det_middle = middle_family.determinant(j)
        if finite_index_compatible(det_inner, det_middle) and finite_index_compatible(
            det_middle, det_outer
        ):
            return SandwichResult(True, middle_family.member(j), a_bound)
        j += 1
    return SandwichResult(False, None, a_bound)


def orbit_class_lattice_check(mu, orbit_size, curve_self_int, invariant_gram):
    """Whether a G-orbit of exceptional curves fits between the invariant lattices

    The orbit divisor V spans, together with the pulled back invariant class,
    a middle lattice diag(stride * a, V^2), stride being the gcd of the
    values of the invariant form.

    Parameters
    ----------
        mu : int
            Index of the class group in the Picard group
        orbit_size : int
            Number of curves in the orbit
        curve_self_int : int/None
            V^2, -2 times the orbit size for disjoint (-2)-curves if None
        invariant_gram : Lattice
            The invariant lattice

    Returns
    -------
        result : SandwichResult
            The outcome of sandwich_feasible

    Raises
    ------
        ValueError
            Raises a value error for an empty orbit or V^2 = 0
    """
    if orbit_size < 1:
        raise ValueError(f"An orbit has at least one curve, got {orbit_size}")
    tail = -2 * orbit_size if curve_self_int is None else curve_self_int
    family = DiagonalFamily(invariant_gram.value_gcd, tail)
    return sandwich_feasible(invariant_gram.scale(mu), invariant_gram, family)
