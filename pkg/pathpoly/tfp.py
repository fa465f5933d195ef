"""Toric fiber products of path polytopes.

Gluing two trees along leaf edges multiplies their path polytopes, each
joined with the origin, fibered over the triangle Delta_3 = conv(e1, e2, e3).
The affine map ``phi`` of ``tfp_isomorphism`` carries the product onto the
path polytope of the glued tree.
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Tuple

from .exceptions import InvalidSpecError, OriginInAffineHullError, ProjectionImageMismatchError
from .path_polytope import vrep
from .polytope import AffineEmbedding, RationalVector, VRep, affine_dimension
from .tree import Edge, GluingSpec, contract_degree2, glue, internal_nodes, leaf_edges, star_decomposition

__all__ = [
    "ORIGIN",
    "Delta3Vertex",
    "GluingSpec",
    "IntegralProjection",
    "TfpTrace",
    "validate_spec",
    "free_join_with_origin",
    "gluing_projections",
    "classify",
    "toric_fiber_product",
    "tfp_isomorphism",
    "tfp_vrep",
    "tfp_trace",
    "lift_incidence",
    "inductive_vrep",
]

logger = logging.getLogger(__name__)

ORIGIN = "origin"
DELTA3_BASIS = (1, 2, 3)
HALF = Fraction(1, 2)


class Delta3Vertex(Enum):
    E1 = (1, 0, 0)
    E2 = (0, 1, 0)
    E3 = (0, 0, 1)

    def __str__(self):
        return "(" + ",".join(map(str, self.value)) + ")"


class IntegralProjection(AffineEmbedding):
    """An affine map from one factor of a gluing onto the span of Delta_3.

    ``side`` is 1 (left) or 2 (right).
    """

    def __init__(self, side, basis, matrix, offset):
        super().__init__(basis, DELTA3_BASIS, matrix, offset)
        self.side = side

    def __repr__(self):
        return f"IntegralProjection(side={self.side}, Q^{len(self.source_basis)} -> Q^3)"


def validate_spec(spec):
    """Check a gluing spec and return it with canonical edges.

    Raises
    ------
    InvalidSpecError
    """
    tree1, edge1, tree2, edge2 = spec
    edge1 = edge1 if isinstance(edge1, Edge) else Edge.of(*edge1)
    edge2 = edge2 if isinstance(edge2, Edge) else Edge.of(*edge2)
    for side, tree, edge in ((1, tree1, edge1), (2, tree2, edge2)):
        if len(tree.edges) < 2:
            raise InvalidSpecError(f"tree {side} needs at least two edges to be glued, got {tree!r}")
        if edge not in leaf_edges(tree):
            raise InvalidSpecError(f"{edge} is not a leaf edge of tree {side}")
    shared = tree1.nodes & tree2.nodes
    if shared:
        raise InvalidSpecError(f"trees share node labels {sorted(shared)}")
    return GluingSpec(tree1, edge1, tree2, edge2)


def free_join_with_origin(V):
    """``conv(V ∪ {0})``; the origin is appended with label ``ORIGIN``.

    Raises
    ------
    OriginInAffineHullError
        If the origin lies in the affine hull of ``V``.
    """
    before = affine_dimension(V)
    joined = V.with_vertex(RationalVector.zeros(V.basis), ORIGIN)
    if len(joined) == len(V) or affine_dimension(joined) != before + 1:
        raise OriginInAffineHullError("the origin lies in the affine hull of the polytope")
    return joined


def gluing_projections(spec):
    """The two projections classifying factor vertices over Delta_3.

    Left side, over the edges of ``tree1``: a leaf edge other than ``edge1``
    maps to ``(1/2, 0, -1/2)``, ``edge1`` to ``(-1/2, 1, -1/2)``, internal
    edges to zero, plus the constant ``(0, 0, 1)``. The right side mirrors
    it: ``(-1/2, 0, 1/2)``, ``(-1/2, 1, -1/2)`` and the constant ``(1, 0, 0)``.
    """
    tree1, edge1, tree2, edge2 = validate_spec(spec)

    def build(side, tree, glued, other_leaf, offset):
        columns = []
        leafy = set(leaf_edges(tree))
        for e in tree.edges:
            if e == glued:
                columns.append((-HALF, 1, -HALF))
            elif e in leafy:
                columns.append(other_leaf)
            else:
                columns.append((0, 0, 0))
        matrix = [[column[r] for column in columns] for r in range(3)]
        return IntegralProjection(side, tree.edges, matrix, offset)

    return (build(1, tree1, edge1, (HALF, 0, -HALF), (0, 0, 1)),
            build(2, tree2, edge2, (-HALF, 0, HALF), (1, 0, 0)))


def classify(projection, x):
    """The Delta_3 vertex that ``projection`` sends ``x`` to."""
    image = projection(x).coords
    try:
        return Delta3Vertex(tuple(image))
    except ValueError:
        raise ProjectionImageMismatchError(f"point maps to {image}, not a vertex of Delta_3") from None


def toric_fiber_product(V1, V2, p1, p2):
    """Concatenated vertex pairs with equal images over Delta_3.

    Pairs are listed in ``(i, j)`` index order and labeled with the labels of
    their two components.

    Raises
    ------
    ProjectionImageMismatchError
        Unless each factor maps onto all three vertices of Delta_3.
    """
    classes1 = [classify(p1, x) for x in V1.vertices]
    classes2 = [classify(p2, y) for y in V2.vertices]
    for side, classes in ((1, classes1), (2, classes2)):
        missing = set(Delta3Vertex) - set(classes)
        if missing:
            raise ProjectionImageMismatchError(
                f"factor {side} misses Delta_3 vertices {', '.join(sorted(map(str, missing)))}")

    if set(V1.basis) & set(V2.basis):
        basis = tuple((1, b) for b in V1.basis) + tuple((2, b) for b in V2.basis)
    else:
        basis = V1.basis + V2.basis
    vertices, labels = [], []
    for x, cx, lx in zip(V1.vertices, classes1, V1.labels):
        for y, cy, ly in zip(V2.vertices, classes2, V2.labels):
            if cx is cy:
                vertices.append(x.coords + y.coords)
                labels.append((lx, ly))
    logger.debug("fiber product of %d and %d vertices has %d", len(V1), len(V2), len(vertices))
    return VRep(basis, vertices, labels)


def tfp_isomorphism(spec):
    """``phi``: both glued edges go to half the merged edge, the rest to themselves."""
    tree1, edge1, tree2, edge2 = spec = validate_spec(spec)
    tree, origins = glue(*spec)
    images = {e: {e: 1} for e in tree1.edges + tree2.edges}
    images[edge1] = {origins.merged_edge: HALF}
    images[edge2] = {origins.merged_edge: HALF}
    return AffineEmbedding.from_images(tree1.edges + tree2.edges, tree.edges, images)


def _leaf_pair(tree, x):
    used = [e for e, c in zip(tree.edges, x.coords) if c]
    return tuple(sorted(e.a if tree.is_leaf(e.a) else e.b for e in used
                        if tree.is_leaf(e.a) or tree.is_leaf(e.b)))


def _glued_vrep(spec, V1, V2):
    p1, p2 = gluing_projections(spec)
    product = toric_fiber_product(free_join_with_origin(V1), free_join_with_origin(V2), p1, p2)
    phi = tfp_isomorphism(spec)
    tree, _ = glue(*spec)
    images = [phi(x) for x in product.vertices]
    return product, VRep(tree.edges, images, [_leaf_pair(tree, x) for x in images])


def tfp_vrep(spec):
    """``phi`` applied to the fiber product of the two joined factor polytopes."""
    spec = validate_spec(spec)
    _, glued = _glued_vrep(spec, vrep(spec.tree1), vrep(spec.tree2))
    return glued


class TfpTrace(NamedTuple):
    """Delta_3 classes of the factor vertices and the matched pair table.

    ``factor1`` and ``factor2`` hold ``(label, vertex, Delta3Vertex)`` rows;
    ``pairs`` holds ``(label1, label2, product vertex, image under phi)``.
    """

    spec: GluingSpec
    factor1: Tuple
    factor2: Tuple
    pairs: Tuple


def tfp_trace(spec):
    spec = validate_spec(spec)
    p1, p2 = gluing_projections(spec)
    joined1 = free_join_with_origin(vrep(spec.tree1))
    joined2 = free_join_with_origin(vrep(spec.tree2))
    factor1 = tuple((lab, x, classify(p1, x)) for lab, x in zip(joined1.labels, joined1.vertices))
    factor2 = tuple((lab, y, classify(p2, y)) for lab, y in zip(joined2.labels, joined2.vertices))
    product = toric_fiber_product(joined1, joined2, p1, p2)
    phi = tfp_isomorphism(spec)
    pairs = tuple((l1, l2, z, phi(z)) for (l1, l2), z in zip(product.labels, product.vertices))
    return TfpTrace(spec, factor1, factor2, pairs)


def lift_incidence(product, face_labels, side):
    """Indices of product vertices whose ``side`` component lies in a factor face."""
    face_labels = set(face_labels)
    return frozenset(k for k, labels in enumerate(product.labels) if labels[side - 1] in face_labels)


def inductive_vrep(tree):
    """Build ``P_T`` by repeated fiber products along a star decomposition.

    Degree-2 nodes are contracted first and the result embedded back.
    """
    contracted, embedding = contract_degree2(tree)
    if not internal_nodes(contracted):
        V = vrep(contracted)
    else:
        (built, _), *rest = star_decomposition(contracted)
        V = vrep(built)
        for star, instruction in rest:
            spec = validate_spec(GluingSpec(built, instruction.edge1, star, instruction.edge2))
            _, V = _glued_vrep(spec, V, vrep(star))
            built, _ = glue(*spec)
            logger.debug("glued along %s, %d vertices so far", instruction.merged_edge, len(V))
    if embedding.source_basis == embedding.target_basis:
        return V
    return VRep(tree.edges, [embedding(x) for x in V.vertices], [_leaf_pair(tree, embedding(x)) for x in V.vertices])
