"""Gluing trees along leaf edges, and the decompositions that undo it."""
import logging
from typing import NamedTuple

import networkx as nx

from ..exceptions import (HasDegreeTwoInternalError, LabelCollisionError, NoInternalNodeError, NotInternalEdgeError,
                          NotLeafEdgeError)
from ..polytope import AffineEmbedding
from .base import Edge, Tree, degree_two_nodes, internal_nodes, star_tree

__all__ = [
    "EdgeOriginMap",
    "GluingSpec",
    "GluingInstruction",
    "glue",
    "contract_degree2",
    "split_at_edge",
    "leaf_endpoint",
    "fresh_leaf",
    "star_decomposition",
    "fold_gluings",
]

logger = logging.getLogger(__name__)


class EdgeOriginMap(dict):
    """Maps every edge of a glued tree to its source edges.

    Values are tuples of ``(side, edge)`` with side 1 or 2; the merged edge
    maps to both glued leaf edges.
    """

    def __init__(self, origins, merged_edge, merged_edge_name=None):
        super().__init__(origins)
        self.merged_edge = merged_edge
        self.merged_edge_name = merged_edge_name or str(merged_edge)

    def name_of(self, edge):
        return self.merged_edge_name if edge == self.merged_edge else str(edge)


class GluingSpec(NamedTuple):
    tree1: Tree
    edge1: Edge
    tree2: Tree
    edge2: Edge


class GluingInstruction(NamedTuple):
    """Glue ``edge1`` of the tree built so far to ``edge2`` of the next star."""

    edge1: Edge
    edge2: Edge
    merged_edge: Edge


def _as_edge(edge):
    return edge if isinstance(edge, Edge) else Edge.of(*edge)


def leaf_endpoint(tree, edge, leaf=None):
    """The endpoint of a leaf edge that is a leaf.

    When both endpoints are leaves (a single-edge tree) ``leaf`` picks one;
    it defaults to ``edge.b``.
    """
    edge = _as_edge(edge)
    if not tree.has_edge(edge):
        raise NotLeafEdgeError(f"{edge} is not an edge of {tree!r}")
    candidates = [x for x in edge if tree.is_leaf(x)]
    if not candidates:
        raise NotLeafEdgeError(f"{edge} is an internal edge")
    if leaf is not None:
        if leaf not in candidates:
            raise NotLeafEdgeError(f"{leaf!r} is not a leaf endpoint of {edge}")
        return leaf
    return candidates[-1]


def glue(tree1, edge1, tree2, edge2, merged_edge_name=None, leaf1=None, leaf2=None):
    """Glue two trees along leaf edges.

    The leaf endpoints ``k1``, ``k2`` of the two edges disappear and their
    other endpoints ``u1``, ``u2`` are joined by a new edge, reported under
    ``merged_edge_name`` when one is given.

    Returns
    -------
    tree : Tree
    origins : EdgeOriginMap

    Raises
    ------
    NotLeafEdgeError
    LabelCollisionError
        If the trees share a node label.
    """
    edge1, edge2 = _as_edge(edge1), _as_edge(edge2)
    k1 = leaf_endpoint(tree1, edge1, leaf1)
    k2 = leaf_endpoint(tree2, edge2, leaf2)
    shared = tree1.nodes & tree2.nodes
    if shared:
        raise LabelCollisionError(f"trees share node labels {sorted(shared)}")

    merged = Edge.of(edge1.other(k1), edge2.other(k2))
    origins = {e: ((1, e),) for e in tree1.edges if e != edge1}
    origins.update({e: ((2, e),) for e in tree2.edges if e != edge2})
    origins[merged] = ((1, edge1), (2, edge2))
    tree = Tree(origins)
    return tree, EdgeOriginMap(origins, merged, merged_edge_name)


def contract_degree2(tree):
    """Suppress every internal degree-2 node.

    Returns
    -------
    contracted : Tree
    embedding : AffineEmbedding
        From the coordinates of ``contracted`` to those of ``tree``; a merged
        edge maps to the sum of the edges of its chain.
    """
    graph = nx.Graph(tree.graph)
    chains = {e: (e,) for e in tree.edges}
    while True:
        twos = sorted(u for u in graph if graph.degree(u) == 2)
        if not twos:
            break
        u = twos[0]
        v, w = sorted(graph.neighbors(u))
        chains[Edge.of(v, w)] = chains.pop(Edge.of(u, v)) + chains.pop(Edge.of(u, w))
        graph.remove_node(u)
        graph.add_edge(v, w)
        logger.debug("suppressed degree-2 node %s between %s and %s", u, v, w)

    if len(chains) == len(tree.edges):
        return tree, AffineEmbedding.identity(tree.edges)
    contracted = Tree(chains)
    images = {e: {original: 1 for original in chain} for e, chain in chains.items()}
    return contracted, AffineEmbedding.from_images(contracted.edges, tree.edges, images)


def fresh_leaf(node, neighbor):
    return f"{node}#{neighbor}"


def split_at_edge(tree, edge):
    """Cut an internal edge ``{u1,u2}`` and cap both halves with fresh leaves.

    Gluing the result back reproduces ``tree`` exactly.

    Returns
    -------
    GluingSpec
        ``tree1`` holds ``u1`` with new leaf ``"<u1>#<u2>"``; ``tree2`` holds
        ``u2`` with ``"<u2>#<u1>"``.
    """
    edge = _as_edge(edge)
    if not tree.has_edge(edge) or tree.is_leaf(edge.a) or tree.is_leaf(edge.b):
        raise NotInternalEdgeError(f"{edge} is not an internal edge of {tree!r}")

    graph = nx.Graph(tree.graph)
    graph.remove_edge(*edge)
    halves = []
    for u, w in ((edge.a, edge.b), (edge.b, edge.a)):
        leaf = fresh_leaf(u, w)
        if leaf in tree.nodes:
            raise LabelCollisionError(f"fresh leaf label {leaf!r} already names a node")
        component = nx.node_connected_component(graph, u)
        edges = list(graph.subgraph(component).edges) + [(u, leaf)]
        halves.append((Tree(edges), Edge.of(u, leaf)))
    (tree1, edge1), (tree2, edge2) = halves
    return GluingSpec(tree1, edge1, tree2, edge2)


def star_decomposition(tree):
    """Express ``tree`` as successive gluings of star trees.

    There is one star per internal node. Neighbors of a center that are
    internal in ``tree`` become fresh leaves ``"<center>#<neighbor>"``.
    Internal edges are glued in canonical edge order, starting from the
    smaller endpoint of the first one; an edge with neither endpoint built
    yet is skipped until one is. ``fold_gluings`` reproduces ``tree`` with
    its original labels.

    Returns
    -------
    list of (Tree, GluingInstruction or None)
        The first star carries no instruction.

    Raises
    ------
    HasDegreeTwoInternalError
    NoInternalNodeError
    """
    if degree_two_nodes(tree):
        raise HasDegreeTwoInternalError(f"internal nodes of degree 2: {', '.join(degree_two_nodes(tree))}")
    centers = internal_nodes(tree)
    if not centers:
        raise NoInternalNodeError("a single edge has no star decomposition")

    def star(u):
        leaves = [w if tree.is_leaf(w) else fresh_leaf(u, w) for w in tree.neighbors(u)]
        clash = tree.nodes.intersection(fresh_leaf(u, w) for w in tree.neighbors(u))
        if clash:
            raise LabelCollisionError(f"fresh leaf labels {sorted(clash)} already name nodes")
        return star_tree(u, leaves)

    pending = [e for e in tree.edges if not (tree.is_leaf(e.a) or tree.is_leaf(e.b))]
    built = {pending[0].a} if pending else {centers[0]}
    decomposition = [(star(min(built)), None)]
    while pending:
        edge = next(e for e in pending if (e.a in built) != (e.b in built))
        pending.remove(edge)
        x, y = (edge.a, edge.b) if edge.a in built else (edge.b, edge.a)
        instruction = GluingInstruction(Edge.of(x, fresh_leaf(x, y)), Edge.of(y, fresh_leaf(y, x)), edge)
        decomposition.append((star(y), instruction))
        built.add(y)
        logger.debug("star at %s glued along %s", y, instruction.merged_edge)
    return decomposition


def fold_gluings(decomposition):
    """Left-fold ``glue`` over a star decomposition."""
    (tree, _), *rest = decomposition
    for star, instruction in rest:
        tree, _ = glue(tree, instruction.edge1, star, instruction.edge2)
    return tree
