"""Path polytopes of trees.

``P_T`` is the convex hull of the 0/1 indicator vectors of leaf-to-leaf paths,
living in the coordinate space indexed by the sorted edge list of ``T``.
"""
import logging
import warnings
from itertools import combinations
from typing import NamedTuple, Optional, Tuple

from .exceptions import (BadParametersError, EqualEndpointsError, HasDegreeTwoInternalError,
                         NonMinimalRepresentationWarning, NotALeafError, TooSmallError, UnknownNodeError)
from .polytope import HRep, LinearConstraint, RationalVector, VRep, canonicalize
from .tree import (Edge, contract_degree2, degree_two_nodes, internal_nodes, leaf_edges, leaves, path_edges,
                   star_tree)

__all__ = [
    "FacetDescriptor",
    "leaf_pairs",
    "path_vertex",
    "vrep",
    "hrep_theorem_main",
    "hrep_general",
    "facet_descriptors",
    "standard_star",
    "star_hrep",
    "hypersimplex_vrep",
    "hypersimplex_hrep",
]

logger = logging.getLogger(__name__)

LEAF_SUM = "leaf-sum"


class FacetDescriptor(NamedTuple):
    """A facet of ``P_T`` named by the tree structure that cuts it out.

    ``kind`` is ``"F"`` (edge ``{u,v}`` unused) or ``"G"`` (directed pair
    ``(u,v)`` with ``u`` internal). ``incident_vertices`` lists the leaf pairs
    whose path vectors lie on the facet.
    """

    kind: str
    edge: Edge
    pair: Optional[Tuple[str, str]]
    constraint: LinearConstraint
    incident_vertices: Tuple[Tuple[str, str], ...]

    @property
    def label(self):
        if self.kind == "F":
            return f"F {self.edge}"
        return f"G ({self.pair[0]},{self.pair[1]})"


def leaf_pairs(tree):
    """Unordered leaf pairs in lexicographic order."""
    return list(combinations(leaves(tree), 2))


def path_vertex(tree, i, j):
    """The indicator vector of the ``i``-``j`` path over ``tree.edges``.

    Raises
    ------
    NotALeafError
    EqualEndpointsError
    """
    for node in (i, j):
        if node not in tree:
            raise UnknownNodeError(f"node {node!r} is not in the tree")
        if not tree.is_leaf(node):
            raise NotALeafError(f"node {node!r} is not a leaf (degree {tree.degree(node)})")
    if i == j:
        raise EqualEndpointsError(f"path endpoints coincide ({i!r})")
    used = set(path_edges(tree, i, j))
    return RationalVector(tree.edges, [int(e in used) for e in tree.edges])


def vrep(tree):
    """All path vertices, labeled by leaf pair, in lexicographic pair order."""
    pairs = leaf_pairs(tree)
    return VRep(tree.edges, [path_vertex(tree, i, j) for i, j in pairs], pairs)


def _unit(tree, coefficients):
    coeffs = [0] * len(tree.edges)
    for edge, c in coefficients.items():
        coeffs[tree.edge_index(edge)] += c
    return coeffs


def _check_theorem_hypotheses(tree):
    twos = degree_two_nodes(tree)
    if twos:
        raise HasDegreeTwoInternalError(f"internal nodes of degree 2: {', '.join(twos)}")
    if len(tree.nodes) <= 3:
        raise TooSmallError(f"the closed form needs more than 3 nodes, the tree has {len(tree.nodes)}")


def _f_edges(tree):
    return [e for e in tree.edges if tree.degree(e.a) != 3 and tree.degree(e.b) != 3]


def _f_constraint(tree, edge):
    return LinearConstraint.inequality(_unit(tree, {edge: 1}))


def _g_constraint(tree, u, v):
    coefficients = {Edge.of(u, w): 1 for w in tree.neighbors(u) if w != v}
    coefficients[Edge.of(u, v)] = -1
    return LinearConstraint.inequality(_unit(tree, coefficients))


def _leaf_sum(tree):
    return LinearConstraint.equality(_unit(tree, {e: 1 for e in leaf_edges(tree)}), 2)


def _closed_form(tree):
    descriptors = {}
    inequalities = []
    for edge in _f_edges(tree):
        c = _f_constraint(tree, edge)
        inequalities.append(c)
        descriptors.setdefault(c, f"F {edge}")
    for u in internal_nodes(tree):
        for v in tree.neighbors(u):
            c = _g_constraint(tree, u, v)
            inequalities.append(c)
            descriptors.setdefault(c, f"G ({u},{v})")
    leaf_sum = _leaf_sum(tree)
    descriptors[leaf_sum] = LEAF_SUM
    return inequalities, [leaf_sum], descriptors


def hrep_theorem_main(tree):
    """The closed-form minimal H-representation of ``P_T``.

    For a tree with more than three nodes and no internal node of degree 2:

    * ``x_{u,v} >= 0`` for every edge whose endpoints both have degree other
      than 3,
    * ``-x_{u,v} + sum(x_{u,w} : w in N(u), w != v) >= 0`` for every internal
      ``u`` and every neighbor ``v``,
    * ``sum(x_e : e a leaf edge) = 2``.

    Raises
    ------
    TooSmallError
    HasDegreeTwoInternalError
    """
    _check_theorem_hypotheses(tree)
    return HRep(tree.edges, *_closed_form(tree))


def facet_descriptors(tree):
    """F and G facets with their incident leaf pairs, found combinatorially.

    ``F {u,v}`` holds the paths avoiding ``{u,v}``; ``G (u,v)`` holds the
    paths through ``{u,v}`` and the paths touching no edge at ``u``.

    Raises
    ------
    TooSmallError
        If the tree has fewer than 3 edges.
    HasDegreeTwoInternalError
    """
    twos = degree_two_nodes(tree)
    if twos:
        raise HasDegreeTwoInternalError(f"internal nodes of degree 2: {', '.join(twos)}")
    if len(tree.edges) < 3:
        raise TooSmallError(f"facet descriptors need at least 3 edges, the tree has {len(tree.edges)}")

    paths = {pair: set(path_edges(tree, *pair)) for pair in leaf_pairs(tree)}
    out = []
    for edge in _f_edges(tree):
        incident = tuple(pair for pair, used in paths.items() if edge not in used)
        out.append(FacetDescriptor("F", edge, None, _f_constraint(tree, edge), incident))
    for u in internal_nodes(tree):
        at_u = {Edge.of(u, w) for w in tree.neighbors(u)}
        for v in tree.neighbors(u):
            edge = Edge.of(u, v)
            incident = tuple(pair for pair, used in paths.items() if edge in used or not used & at_u)
            out.append(FacetDescriptor("G", edge, (u, v), _g_constraint(tree, u, v), incident))
    return out


def _chain_edge_at(tree, u, v):
    """The edge of ``tree`` at ``u`` on the way to ``v``."""
    return next(e for e in path_edges(tree, u, v) if u in e)


def hrep_general(tree):
    """An H-representation of ``P_T`` for any tree.

    Internal degree-2 nodes are suppressed first and the closed form of the
    contracted tree is written back in the edges of ``tree``: a contracted
    edge ``{a,b}`` stands for the first edge of its chain at ``a``, so every
    G row keeps the neighbors ``u`` has in ``tree``, and the leaf-sum runs
    over the leaf edges of ``tree``. Every suppressed node ``u`` with
    neighbors ``v``, ``w`` adds ``x_{u,v} = x_{u,w}``. The inequalities
    ``x_e >= 0`` that the closed form asks for on ``tree`` itself are kept as
    well; some of those are implied by the equalities, so the result is not
    minimal. A tree that contracts to a single edge gives the point
    ``{x_e = 1}``.

    Warns
    -----
    NonMinimalRepresentationWarning
        When degree-2 nodes were suppressed.
    """
    twos = degree_two_nodes(tree)
    if not twos:
        if len(tree.edges) == 1:
            point = LinearConstraint.equality([1], 1)
            return HRep(tree.edges, [], [point], {point: "single edge"})
        return hrep_theorem_main(tree)

    warnings.warn(f"tree has internal degree-2 nodes ({', '.join(twos)}); the H-representation is not minimal",
                  NonMinimalRepresentationWarning, stacklevel=2)
    contracted, _ = contract_degree2(tree)
    descriptors = {}
    inequalities = []

    def add(c, descriptor):
        if c not in descriptors:
            inequalities.append(c)
            descriptors[c] = descriptor

    if len(contracted.edges) > 1:
        for f in _f_edges(contracted):
            edge = _chain_edge_at(tree, f.a, f.b)
            add(_f_constraint(tree, edge), f"F {edge}")
        for edge in _f_edges(tree):
            add(_f_constraint(tree, edge), f"F {edge}")
        for u in internal_nodes(contracted):
            for v in tree.neighbors(u):
                add(_g_constraint(tree, u, v), f"G ({u},{v})")

    leaf_sum = _leaf_sum(tree)
    equalities = [leaf_sum]
    descriptors[leaf_sum] = LEAF_SUM
    for u in twos:
        v, w = tree.neighbors(u)
        c = LinearConstraint.equality(_unit(tree, {Edge.of(u, v): 1, Edge.of(u, w): -1}))
        equalities.append(c)
        descriptors.setdefault(c, f"degree-2 {u}")
    logger.debug("closed form of %r written over %d edges", contracted, len(tree.edges))
    return HRep(tree.edges, inequalities, equalities, descriptors)


def _star_labels(n):
    width = len(str(n))
    return "0" * width, [str(i).zfill(width) for i in range(1, n + 1)]


def standard_star(n):
    """``S_n``: center ``0`` with leaves ``1..n``, zero-padded."""
    center, leaf_labels = _star_labels(n)
    return star_tree(center, leaf_labels)


def star_hrep(n):
    """The closed form for ``S_n`` in hypersimplex coordinates ``1..n``."""
    return hrep_theorem_main(standard_star(n)).rebase(range(1, n + 1))


def _check_hypersimplex(n, k):
    if not (isinstance(n, int) and isinstance(k, int)) or not 1 <= k < n:
        raise BadParametersError(f"hypersimplex needs integers 1 <= k < n, got n={n!r}, k={k!r}")


def hypersimplex_vrep(n, k):
    """0/1 vectors of length ``n`` with exactly ``k`` ones, lexicographically by support."""
    _check_hypersimplex(n, k)
    vertices, labels = [], []
    for ones in combinations(range(n), k):
        vertices.append([int(i in ones) for i in range(n)])
        labels.append(tuple(i + 1 for i in ones))
    return VRep(range(1, n + 1), vertices, labels)


def hypersimplex_hrep(n, k):
    """``sum(x) = k`` and ``0 <= x_i <= 1``, canonicalized."""
    _check_hypersimplex(n, k)
    inequalities = []
    for i in range(n):
        unit = [int(i == j) for j in range(n)]
        inequalities.append(LinearConstraint.inequality(unit, 0))
        inequalities.append(LinearConstraint.inequality([-c for c in unit], -1))
    return canonicalize(HRep(range(1, n + 1), inequalities, [LinearConstraint.equality([1] * n, k)]))
