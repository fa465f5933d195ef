from fractions import Fraction

import numpy as np

from .._extmath import as_fraction, rank, rational_array
from ..exceptions import BasisMismatchError
from .base import RationalVector

__all__ = ["AffineEmbedding"]


class AffineEmbedding:
    """Exact affine map ``x -> matrix @ x + offset`` between named bases.

    Parameters
    ----------
    source_basis, target_basis : tuple
    matrix : array-like of shape (len(target_basis), len(source_basis))
    offset : array-like of shape (len(target_basis),), default=0
    """

    def __init__(self, source_basis, target_basis, matrix, offset=None):
        self.source_basis = tuple(source_basis)
        self.target_basis = tuple(target_basis)
        self.matrix = rational_array(matrix, len(self.source_basis))
        if self.matrix.shape != (len(self.target_basis), len(self.source_basis)):
            raise BasisMismatchError(f"matrix of shape {self.matrix.shape} does not map "
                                     f"Q^{len(self.source_basis)} to Q^{len(self.target_basis)}")
        if offset is None:
            offset = [0] * len(self.target_basis)
        self.offset = rational_array([offset], len(self.target_basis))[0]

    @classmethod
    def identity(cls, basis):
        n = len(basis)
        return cls(basis, basis, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_images(cls, source_basis, target_basis, images, offset=None):
        """Build the map from the image of every source basis vector.

        ``images`` maps a source label to ``{target label: coefficient}``.
        """
        source_basis, target_basis = tuple(source_basis), tuple(target_basis)
        index = {label: i for i, label in enumerate(target_basis)}
        matrix = [[Fraction(0)] * len(source_basis) for _ in target_basis]
        for j, label in enumerate(source_basis):
            for target, coeff in images[label].items():
                matrix[index[target]][j] = as_fraction(coeff)
        return cls(source_basis, target_basis, matrix, offset)

    def __repr__(self):
        return f"AffineEmbedding(Q^{len(self.source_basis)} -> Q^{len(self.target_basis)})"

    def __eq__(self, other):
        if not isinstance(other, AffineEmbedding):
            return NotImplemented
        return (self.source_basis == other.source_basis and self.target_basis == other.target_basis
                and (self.matrix == other.matrix).all() and (self.offset == other.offset).all())

    def __call__(self, x):
        if isinstance(x, RationalVector):
            if x.basis != self.source_basis:
                raise BasisMismatchError("point is not expressed in the source basis of the map")
            coords = x.to_array()
        else:
            coords = rational_array([x], len(self.source_basis))[0]
        image = np.dot(self.matrix, coords) + self.offset
        return RationalVector(self.target_basis, image)

    def is_injective(self):
        return rank(self.matrix.tolist(), len(self.source_basis)) == len(self.source_basis)

