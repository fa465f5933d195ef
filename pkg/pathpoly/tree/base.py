"""Labeled undirected trees.

Node labels are whitespace-free strings compared lexicographically; the
sorted edge list of a tree is the coordinate order of R^E everywhere else in
the package.
"""
from typing import NamedTuple

import networkx as nx

from ..exceptions import (DisconnectedError, DuplicateEdgeError, EqualEndpointsError, HasCycleError,
                          SelfLoopError, TooFewNodesError, TreeFormatError, UnknownNodeError)

__all__ = [
    "NodeId",
    "Edge",
    "Tree",
    "leaves",
    "internal_nodes",
    "leaf_edges",
    "degree_two_nodes",
    "path_edges",
    "is_star",
    "star_tree",
]

NodeId = str


def _check_label(label):
    if not isinstance(label, str) or not label or any(ch.isspace() for ch in label):
        raise TreeFormatError(f"node labels must be nonempty strings without whitespace, got {label!r}")
    return label


class Edge(NamedTuple):
    """Unordered node pair stored with ``a < b``; build it with ``Edge.of``."""

    a: NodeId
    b: NodeId

    @classmethod
    def of(cls, u, v):
        if u == v:
            raise SelfLoopError(f"self-loop at node {u!r}")
        return cls(u, v) if u < v else cls(v, u)

    def other(self, node):
        if node == self.a:
            return self.b
        if node == self.b:
            return self.a
        raise UnknownNodeError(f"{node!r} is not an endpoint of {self}")

    def __str__(self):
        return f"{{{self.a},{self.b}}}"


class Tree:
    """An immutable labeled tree with at least two nodes.

    Parameters
    ----------
    edges : iterable of Edge or 2-sequences of labels

    Raises
    ------
    SelfLoopError, DuplicateEdgeError, TooFewNodesError, HasCycleError, DisconnectedError
    """

    def __init__(self, edges):
        canonical = []
        seen = set()
        for pair in edges:
            u, v = pair
            edge = Edge.of(_check_label(u), _check_label(v))
            if edge in seen:
                raise DuplicateEdgeError(f"edge {edge} listed twice")
            seen.add(edge)
            canonical.append(edge)

        graph = nx.Graph()
        graph.add_edges_from(canonical)
        if graph.number_of_nodes() <= 1:
            raise TooFewNodesError("a tree needs at least two nodes")
        if not nx.is_forest(graph):
            raise HasCycleError(f"edges {', '.join(map(str, sorted(canonical)))} contain a cycle")
        if not nx.is_connected(graph):
            n = nx.number_connected_components(graph)
            raise DisconnectedError(f"edges form {n} connected components")

        self.edges = tuple(sorted(canonical))
        self.nodes = frozenset(graph.nodes)
        self.adjacency = {u: tuple(sorted(graph.neighbors(u))) for u in sorted(graph.nodes)}
        self._graph = nx.freeze(graph)
        self._index = {edge: i for i, edge in enumerate(self.edges)}

    @property
    def graph(self):
        """Read-only ``networkx.Graph`` view of the tree."""
        return self._graph

    def __contains__(self, node):
        return node in self.nodes

    def __len__(self):
        return len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return "Tree(" + " ".join(map(str, self.edges)) + ")"

    def _check_node(self, node):
        if node not in self.nodes:
            raise UnknownNodeError(f"node {node!r} is not in the tree")

    def degree(self, node):
        self._check_node(node)
        return len(self.adjacency[node])

    def neighbors(self, node):
        self._check_node(node)
        return self.adjacency[node]

    def is_leaf(self, node):
        return self.degree(node) == 1

    def has_edge(self, edge):
        return edge in self._index

    def edge_index(self, edge):
        try:
            return self._index[edge]
        except KeyError:
            raise UnknownNodeError(f"edge {edge} is not in the tree") from None

    def to_edge_list(self):
        return "".join(f"{e.a} {e.b}\n" for e in self.edges)


def leaves(tree):
    """Degree-one nodes, sorted."""
    return [u for u, nbrs in tree.adjacency.items() if len(nbrs) == 1]


def internal_nodes(tree):
    return [u for u, nbrs in tree.adjacency.items() if len(nbrs) > 1]


def leaf_edges(tree):
    """Edges with at least one leaf endpoint, in canonical order."""
    return [e for e in tree.edges if tree.is_leaf(e.a) or tree.is_leaf(e.b)]


def degree_two_nodes(tree):
    return [u for u, nbrs in tree.adjacency.items() if len(nbrs) == 2]


def path_edges(tree, i, j):
    """Edges of the unique ``i``-``j`` path, in canonical edge order.

    Raises
    ------
    UnknownNodeError
    EqualEndpointsError
    """
    tree._check_node(i)
    tree._check_node(j)
    if i == j:
        raise EqualEndpointsError(f"path endpoints coincide ({i!r})")
    walk = nx.shortest_path(tree.graph, i, j)
    return sorted(Edge.of(u, v) for u, v in zip(walk, walk[1:]))


def is_star(tree):
    return len(internal_nodes(tree)) == 1


def star_tree(center, leaf_labels):
    return Tree((center, leaf) for leaf in leaf_labels)
