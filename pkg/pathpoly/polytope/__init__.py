from .affine import AffineEmbedding
from .base import ConstraintKind, HRep, LinearConstraint, RationalVector, VRep
from .operations import (affine_dimension, canonicalize, contains, is_facet, is_relative_interior,
                         vertices_on_hyperplane, violated_constraints)

__all__ = [
    "AffineEmbedding",
    "ConstraintKind",
    "HRep",
    "LinearConstraint",
    "RationalVector",
    "VRep",
    "affine_dimension",
    "canonicalize",
    "contains",
    "is_facet",
    "is_relative_interior",
    "vertices_on_hyperplane",
    "violated_constraints",
]
