from ._gluing import (EdgeOriginMap, GluingInstruction, GluingSpec, contract_degree2, fold_gluings, fresh_leaf, glue,
                      leaf_endpoint, split_at_edge, star_decomposition)
from ._parse import parse_edge_list, parse_newick, read_tree
from .base import (Edge, NodeId, Tree, degree_two_nodes, internal_nodes, is_star, leaf_edges, leaves, path_edges,
                   star_tree)
from .enumeration import nonisomorphic_trees, trees_up_to

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
    "parse_edge_list",
    "parse_newick",
    "read_tree",
    "EdgeOriginMap",
    "GluingSpec",
    "GluingInstruction",
    "glue",
    "leaf_endpoint",
    "contract_degree2",
    "split_at_edge",
    "fresh_leaf",
    "star_decomposition",
    "fold_gluings",
    "nonisomorphic_trees",
    "trees_up_to",
]
