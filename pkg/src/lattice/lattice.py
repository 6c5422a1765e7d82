from math import gcd

import numpy as np
from sympy import Matrix, ZZ, symbols
from sympy.matrices.normalforms import invariant_factors

from abelian import AbelianGroup


class DegenerateLatticeError(ValueError):
    """Raised when a computation needs a nondegenerate form"""


class Lattice:
    def __init__(self, gram):
        """An integral lattice given by its Gram matrix

        Parameters
        ----------
            gram : array-like
                Square symmetric integer matrix, row-major

        Raises
        ------
            ValueError
                Raises a value error if the matrix is not square, symmetric and integral
        """
        gram = np.array(gram, dtype=object)
        if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
            raise ValueError(f"A Gram matrix must be square, got shape {gram.shape}")
        if any(int(x) != x for x in gram.flat):
            raise ValueError("A Gram matrix must have integer entries")
        gram = np.array([[int(x) for x in row] for row in gram], dtype=object)
        if not (gram == gram.T).all():
            raise ValueError("A Gram matrix must be symmetric")
        self._gram = gram

    @property
    def gram(self):
        return self._gram.tolist()

    @property
    def rank(self):
        return self._gram.shape[0]

    @property
    def matrix(self):
        return Matrix(self.gram)

    @property
    def is_even(self):
        return all(x % 2 == 0 for x in np.diagonal(self._gram))

    @property
    def determinant(self):
        return int(self.matrix.det(method="bareiss"))

    def _check_nondegenerate(self):
        if self.determinant == 0:
            raise DegenerateLatticeError(f"The form {self.gram} is degenerate")

    @property
    def discriminant_group(self):
        """The discriminant group, product of Z/d over the Smith invariants d of the Gram matrix"""
        self._check_nondegenerate()
        factors = [abs(int(d)) for d in invariant_factors(self.matrix, domain=ZZ)]
        return AbelianGroup.from_factors(factors)

    @property
    def signature(self):
        """The numbers of positive and negative eigenvalues

        Read exactly off the characteristic polynomial by Descartes' rule of
        signs, which counts roots exactly when all of them are real.
        """
        self._check_nondegenerate()
        x = symbols("x")
        polynomial = self.matrix.charpoly(x)
        coefficients = [int(c) for c in polynomial.all_coeffs()]
        mirrored = [c * (-1) ** (len(coefficients) - 1 - i) for i, c in enumerate(coefficients)]
        positive = _sign_changes(coefficients)
        negative = _sign_changes(mirrored)
        assert positive + negative == self.rank, "Eigenvalue count does not match rank"
        return positive, negative

    @property
    def value_gcd(self):
        """gcd of all values x.x, i.e. of the diagonal and twice the off-diagonal entries"""
        values = [int(x) for x in np.diagonal(self._gram)]
        values += [
            2 * int(self._gram[i, j]) for i in range(self.rank) for j in range(i + 1, self.rank)
        ]
        result = 0
        for value in values:
            result = gcd(result, value)
        return result

    def scale(self, k):
        if k < 1:
            raise ValueError(f"Lattices are scaled by positive integers, got {k}")
        return Lattice(self._gram * (k * k))

    def congruent(self, basis_change):
        """The same lattice in another basis, U^T B U"""
        u = np.array(basis_change, dtype=object)
        return Lattice(u.T.dot(self._gram).dot(u))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(str(self.gram))

    def __repr__(self):
        return f"Lattice({self.gram})"


def _sign_changes(coefficients):
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def determinant(l):
    return l.determinant


def discriminant_group(l):
    return l.discriminant_group


def scale(l, k):
    return l.scale(k)


def signature(l):
    return l.signature
