"""Non-isomorphic tree topologies with canonical labels."""
from collections import deque

import networkx as nx

from .base import Tree

__all__ = ["canonical_labels", "nonisomorphic_trees", "trees_up_to"]


def canonical_labels(graph):
    """Label nodes ``1..n`` in breadth-first order from the graph center.

    Labels are zero-padded so that lexicographic and numeric order agree.
    """
    start = min(nx.center(graph))
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in sorted(graph.neighbors(u)):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    width = len(str(len(order)))
    return {u: str(i).zfill(width) for i, u in enumerate(order, 1)}


def nonisomorphic_trees(n_edges):
    """Yield one labeled representative of every tree shape with ``n_edges`` edges."""
    if n_edges < 1:
        raise ValueError(f"n_edges must be positive, got {n_edges}")
    if n_edges == 1:
        yield Tree([("1", "2")])
        return
    for graph in nx.nonisomorphic_trees(n_edges + 1):
        labels = canonical_labels(graph)
        yield Tree((labels[u], labels[v]) for u, v in graph.edges)


def trees_up_to(max_edges):
    for n_edges in range(1, max_edges + 1):
        yield from nonisomorphic_trees(n_edges)
