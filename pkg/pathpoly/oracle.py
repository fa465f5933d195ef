"""Brute-force facet and vertex enumeration in exact arithmetic.

Independent of the closed forms in ``path_polytope``: cddlib does the
conversions through pycddlib in fraction mode, refused above a desk-scale cap.
"""
import logging
import os
import time
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

import cdd

from . import defaults
from .exceptions import BasisMismatchError, CapExceededError, EmptyVRepError, UnboundedError
from .polytope import HRep, LinearConstraint, RationalVector, VRep, affine_dimension, canonicalize, contains

__all__ = [
    "OracleReport",
    "Verdict",
    "ComparisonResult",
    "resolve_cap",
    "minimal_hrep",
    "assert_extremal",
    "vertices_from_hrep",
    "compare_hreps",
    "redundant_inequalities",
]

logger = logging.getLogger(__name__)


def resolve_cap(cap=None):
    """``(max_coordinates, max_vertices)`` from the argument, the environment or the defaults.

    The environment variable holds ``"<coords>"`` or ``"<coords>,<vertices>"``.
    """
    settings = defaults["oracle"]
    if cap is not None:
        coords, vertices = cap
        return int(coords), int(vertices)
    coords, vertices = settings["max_coordinates"], settings["max_vertices"]
    raw = os.environ.get(settings["cap_env"])
    if raw:
        parts = raw.split(",")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            values = []
        if len(values) not in (1, 2) or any(v <= 0 for v in values):
            raise ValueError(f"{settings['cap_env']} must be '<coords>' or '<coords>,<vertices>', got {raw!r}")
        coords = values[0]
        if len(values) == 2:
            vertices = values[1]
        logger.debug("oracle cap from %s: %d coordinates, %d vertices", settings["cap_env"], coords, vertices)
    return coords, vertices


def _check_cap(n_coords, n_vertices, cap):
    max_coords, max_vertices = resolve_cap(cap)
    if n_coords > max_coords or n_vertices > max_vertices:
        raise CapExceededError(f"oracle input of {n_vertices} points in Q^{n_coords} exceeds the cap of "
                               f"{max_vertices} points in Q^{max_coords}")


def _cdd_matrix(rows, rep_type, linear=False):
    mat = cdd.Matrix(rows, linear=linear, number_type="fraction")
    mat.rep_type = rep_type
    return mat


def _rows(mat):
    return [tuple(mat[i]) for i in range(mat.row_size)]


def _constraints(mat):
    """Split a cdd H-matrix ``b + A x >= 0`` into our equalities and inequalities."""
    inequalities, equalities = [], []
    for i, (b, *coeffs) in enumerate(_rows(mat)):
        if not any(coeffs):
            continue
        if i in mat.lin_set:
            equalities.append(LinearConstraint.equality(coeffs, -b))
        else:
            inequalities.append(LinearConstraint.inequality(coeffs, -b))
    return inequalities, equalities


class OracleReport(NamedTuple):
    basis: Tuple
    input_vertex_count: int
    affine_dim: int
    facet_constraints: Tuple[LinearConstraint, ...]
    equality_constraints: Tuple[LinearConstraint, ...]
    elapsed: float

    @property
    def hrep(self):
        return HRep(self.basis, self.facet_constraints, self.equality_constraints)

    @property
    def facet_count(self):
        return len(self.facet_constraints)


def minimal_hrep(V, cap=None):
    """The minimal H-representation of ``conv(V)``.

    cddlib converts the generators ``(1, v)`` to an inequality matrix, and
    ``canonicalize`` on that matrix finds the implicit equalities and drops
    redundant rows. Equalities span the affine hull; inequalities are the
    facets inside it.

    Raises
    ------
    EmptyVRepError
    CapExceededError
    """
    if not len(V):
        raise EmptyVRepError("minimal H-representation of an empty V-representation")
    _check_cap(V.ambient_dim, len(V), cap)
    start = time.perf_counter()

    generators = _cdd_matrix([(1,) + v.coords for v in V.vertices], cdd.RepType.GENERATOR)
    mat = cdd.Polyhedron(generators).get_inequalities()
    mat.canonicalize()
    inequalities, equalities = _constraints(mat)

    H = canonicalize(HRep(V.basis, inequalities, equalities))
    dim = affine_dimension(V)
    elapsed = time.perf_counter() - start
    logger.debug("oracle: %d points, dim %d, %d facets in %.3fs", len(V), dim, len(H.inequalities), elapsed)
    return OracleReport(V.basis, len(V), dim, H.inequalities, H.equalities, elapsed)


def assert_extremal(V, cap=None):
    """True iff no listed point is a convex combination of the others."""
    if len(V) <= 1:
        return True
    _check_cap(V.ambient_dim, len(V), cap)
    mat = _cdd_matrix([(1,) + v.coords for v in V.vertices], cdd.RepType.GENERATOR)
    _, redundant = mat.canonicalize()
    for i in sorted(redundant):
        logger.debug("%r is not extremal", V.vertices[i])
    return not redundant


def vertices_from_hrep(H, cap=None):
    """Vertices of the polytope described by ``H``; empty when it is infeasible.

    Raises
    ------
    UnboundedError
        If the described set is not a bounded polytope.
    """
    _check_cap(len(H.basis), 0, cap)
    equalities = [(-c.rhs,) + tuple(c.coeffs) for c in H.equalities]
    inequalities = [(-c.rhs,) + tuple(c.coeffs) for c in H.inequalities]
    if not (equalities or inequalities):
        raise UnboundedError("no constraints: the set is the whole space")
    mat = _cdd_matrix(equalities or inequalities, cdd.RepType.INEQUALITY, linear=bool(equalities))
    if equalities and inequalities:
        mat.extend(inequalities)

    generators = cdd.Polyhedron(mat).get_generators()
    vertices = []
    for i, (t, *x) in enumerate(_rows(generators)):
        if t == 0 or i in generators.lin_set:
            raise UnboundedError("the H-representation has a recession direction")
        vertices.append([Fraction(value) / t for value in x])
    logger.debug("cdd: %d constraints -> %d vertices", len(H.constraints), len(vertices))
    return VRep(H.basis, sorted(vertices, reverse=True))


class Verdict(Enum):
    EQUAL = "EQUAL"
    EQUIVALENT = "EQUIVALENT"
    DIFFERENT = "DIFFERENT"


class ComparisonResult(NamedTuple):
    verdict: Verdict
    witness: Optional[RationalVector] = None
    detail: str = ""

    @property
    def same_polytope(self):
        return self.verdict is not Verdict.DIFFERENT


def compare_hreps(A, B, cap=None):
    """Compare two H-representations over the same basis.

    EQUAL when their canonical forms coincide, EQUIVALENT when each one's
    vertices satisfy the other, DIFFERENT otherwise with a witness vertex of
    one that violates the other.

    Raises
    ------
    BasisMismatchError
    """
    if A.basis != B.basis:
        raise BasisMismatchError("H-representations use different coordinate bases")
    if canonicalize(A) == canonicalize(B):
        return ComparisonResult(Verdict.EQUAL)
    for name, here, other, other_name in (("first", A, B, "second"), ("second", B, A, "first")):
        for v in vertices_from_hrep(here, cap).vertices:
            if not contains(other, v):
                return ComparisonResult(Verdict.DIFFERENT, v,
                                        f"vertex of the {name} description violates the {other_name}")
    return ComparisonResult(Verdict.EQUIVALENT)


def redundant_inequalities(H, cap=None):
    """Inequalities of ``canonicalize(H)`` that are not facets of the polytope it describes.

    Raises
    ------
    UnboundedError
    """
    canonical = canonicalize(H)
    facets = set(minimal_hrep(vertices_from_hrep(H, cap), cap).facet_constraints)
    redundant = [c for c in canonical.inequalities if c not in facets]
    logger.debug("%d of %d inequalities are redundant", len(redundant), len(canonical.inequalities))
    return redundant
