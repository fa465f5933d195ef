from fractions import Fraction

from .._extmath import rank, rref
from ..exceptions import (BasisMismatchError, EmptyVRepError, NotValidInequalityError,
                          ZeroConstraintError)
from .base import HRep, LinearConstraint, RationalVector, VRep

__all__ = [
    "affine_dimension",
    "contains",
    "violated_constraints",
    "is_relative_interior",
    "vertices_on_hyperplane",
    "is_facet",
    "canonicalize",
]


def affine_dimension(V):
    """Dimension of the affine hull of a V-representation.

    Parameters
    ----------
    V : VRep

    Returns
    -------
    dim : int
        Rank of ``{v - v0 : v in V}``.

    Raises
    ------
    EmptyVRepError
        If ``V`` has no vertices; the ``-1`` convention is not used.
    """
    if not len(V):
        raise EmptyVRepError("affine dimension of an empty V-representation")
    v0 = V.vertices[0].coords
    diffs = [[a - b for a, b in zip(v.coords, v0)] for v in V.vertices[1:]]
    return rank(diffs, V.ambient_dim)


def _check_point(H, x):
    if isinstance(x, RationalVector):
        if x.basis != H.basis:
            raise BasisMismatchError("point and H-representation use different coordinate bases")
        return x
    x = tuple(x)
    if len(x) != len(H.basis):
        raise BasisMismatchError(f"point has {len(x)} coordinates, H-representation has {len(H.basis)}")
    return RationalVector(H.basis, x)


def contains(H, x):
    """True iff ``x`` satisfies every constraint of ``H`` exactly."""
    x = _check_point(H, x)
    return all(c.is_satisfied(x.coords) for c in H.constraints)


def violated_constraints(H, x):
    x = _check_point(H, x)
    return [c for c in H.constraints if not c.is_satisfied(x.coords)]


def is_relative_interior(H, x):
    """Member of ``H`` with every inequality strict."""
    x = _check_point(H, x)
    return contains(H, x) and all(c.slack(x.coords) > 0 for c in H.inequalities)


def _check_valid(V, c):
    if len(c) != V.ambient_dim:
        raise BasisMismatchError(f"constraint over {len(c)} coordinates, polytope lives in Q^{V.ambient_dim}")
    for vertex in V.vertices:
        if not c.is_satisfied(vertex.coords):
            raise NotValidInequalityError(f"{c.format(V.basis)} is violated by vertex {vertex!r}")


def vertices_on_hyperplane(V, c):
    """The face of ``conv(V)`` cut out by a valid constraint.

    Returns
    -------
    VRep
        The vertices satisfying ``c`` with equality, labels kept.
    """
    _check_valid(V, c)
    return V.subset(i for i, v in enumerate(V.vertices) if c.is_tight(v.coords))


def is_facet(V, c):
    _check_valid(V, c)
    face = vertices_on_hyperplane(V, c)
    if not len(face):
        return False
    return affine_dimension(face) == affine_dimension(V) - 1


def _reduce(values, reduced_equalities, pivots):
    values = list(values)
    for row, pivot in zip(reduced_equalities, pivots):
        factor = values[pivot]
        if factor:
            values = [a - factor * b for a, b in zip(values, row)]
    return values


def canonicalize(H):
    """Canonical form of an H-representation.

    Equalities are replaced by the reduced row echelon basis of their span
    (as primitive integer rows); every inequality is reduced modulo that span
    (zero in each pivot column), made primitive, deduplicated and sorted. Two
    descriptions of the same constraint system compare equal afterwards, also
    for polytopes that are not full-dimensional.

    Raises
    ------
    ZeroConstraintError
        If the equalities are inconsistent or an inequality reduces to
        ``0 >= c`` with ``c > 0``.
    """
    n = len(H.basis)
    rows = [list(c.coeffs) + [c.rhs] for c in H.equalities]
    reduced, pivots = rref(rows, n + 1)
    if n in pivots:
        raise ZeroConstraintError("the equalities are inconsistent (0 = 1 in their span)")
    equalities = [LinearConstraint.equality(row[:n], row[n]) for row in reduced]

    inequalities = []
    for c in H.inequalities:
        values = _reduce([Fraction(v) for v in c.coeffs] + [Fraction(c.rhs)], reduced, pivots)
        if not any(values[:n]):
            if values[n] > 0:
                raise ZeroConstraintError(f"{c.format(H.basis)} reduces to an infeasible constant constraint")
            continue
        inequalities.append(LinearConstraint.inequality(values[:n], values[n]))

    return HRep(H.basis,
                sorted(set(inequalities), key=LinearConstraint.sort_key),
                sorted(set(equalities), key=LinearConstraint.sort_key))
