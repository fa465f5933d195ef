import logging
from pathlib import Path

from ..exceptions import (DuplicateEdgeError, DuplicateLabelError, MalformedEdgeListError, MalformedNewickError,
                          SelfLoopError, TooFewNodesError)
from .base import Edge, Tree

__all__ = ["parse_edge_list", "parse_newick", "read_tree", "NEWICK_SUFFIXES"]

logger = logging.getLogger(__name__)

NEWICK_SUFFIXES = (".nwk", ".newick", ".tree")
_NEWICK_DELIMITERS = set(":,;()")


def parse_edge_list(text):
    """Parse one edge per line, two whitespace-separated labels.

    Blank lines and lines starting with ``#`` are skipped. Errors found on a
    specific line carry its 1-based number.

    Raises
    ------
    MalformedEdgeListError, SelfLoopError, DuplicateEdgeError,
    TooFewNodesError, HasCycleError, DisconnectedError
    """
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedEdgeListError(f"expected two labels, got {len(tokens)}: {line!r}", line=lineno)
        u, v = tokens
        if u == v:
            raise SelfLoopError(f"self-loop at node {u!r}", line=lineno)
        edge = Edge.of(u, v)
        if edge in seen:
            raise DuplicateEdgeError(f"edge {edge} already listed on line {seen[edge]}", line=lineno)
        seen[edge] = lineno
        edges.append(edge)
    if not edges:
        raise TooFewNodesError("edge list is empty; a tree needs at least two nodes")
    return Tree(edges)


class _Node:
    __slots__ = ("label", "children", "parent")

    def __init__(self, parent=None):
        self.label = None
        self.children = []
        self.parent = parent
        if parent is not None:
            parent.children.append(self)

    def preorder(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


def _line_of(text, i):
    return text.count("\n", 0, i) + 1


def _read_newick(text):
    root = _Node()
    n = root
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            pass

        # end of the Newick string
        elif ch == ";":
            if text[i + 1:].strip() or n is not root:
                raise MalformedNewickError("unbalanced parentheses or trailing text after ';'",
                                           line=_line_of(text, i))
            return root

        elif ch == "(":
            if n.label is not None or n.children:
                raise MalformedNewickError("unexpected '('", line=_line_of(text, i))
            n = _Node(n)

        elif ch == ")":
            if n.parent is None:
                raise MalformedNewickError("unbalanced ')'", line=_line_of(text, i))
            n = n.parent

        elif ch == ",":
            if n.parent is None:
                raise MalformedNewickError("',' outside of a group", line=_line_of(text, i))
            n = _Node(n.parent)

        # branch length, parsed and discarded
        elif ch == ":":
            start = i + 1
            while i + 1 < len(text) and text[i + 1] not in ",);":
                i += 1
            length = text[start:i + 1].strip()
            try:
                float(length)
            except ValueError:
                raise MalformedNewickError(f"bad branch length {length!r}", line=_line_of(text, start)) from None

        else:
            start = i
            while i + 1 < len(text) and text[i + 1] not in _NEWICK_DELIMITERS and not text[i + 1].isspace():
                i += 1
            if n.label is not None:
                raise MalformedNewickError(f"unexpected label {text[start:i + 1]!r}", line=_line_of(text, start))
            n.label = text[start:i + 1]
        i += 1
    raise MalformedNewickError("missing terminating ';'", line=_line_of(text, len(text)))


def parse_newick(text):
    """Parse a topology-only Newick string into an unrooted tree.

    Branch lengths are accepted and dropped. Unlabeled internal nodes are
    named ``_1``, ``_2``, ... in preorder. A root with exactly two children is
    suppressed, labeled or not, and its two children joined directly; any
    other root is kept as a node. Single-child groups such as ``(b)`` are rejected.

    Raises
    ------
    MalformedNewickError, DuplicateLabelError, TooFewNodesError
    """
    root = _read_newick(text)
    nodes = list(root.preorder())
    if not root.children:
        raise TooFewNodesError("Newick string describes a single node")

    labels = set()
    for node in nodes:
        if len(node.children) == 1:
            raise MalformedNewickError(f"group with a single child under {node.label or 'an unlabeled node'}")
        if not node.children and not node.label:
            raise MalformedNewickError("unlabeled leaf")
        if node.label is not None:
            if node.label in labels:
                raise DuplicateLabelError(f"label {node.label!r} used twice")
            labels.add(node.label)

    suppress_root = len(root.children) == 2
    counter = 0
    for node in nodes:
        if node.label is None and not (node is root and suppress_root):
            counter += 1
            while f"_{counter}" in labels:
                counter += 1
            node.label = f"_{counter}"

    edges = [(node.parent.label, node.label) for node in nodes if node.parent is not None
             and not (suppress_root and node.parent is root)]
    if suppress_root:
        left, right = root.children
        edges.append((left.label, right.label))
        logger.debug("suppressed the degree-2 Newick root between %s and %s", left.label, right.label)
    return Tree(edges)


def read_tree(path, newick=None):
    """Read a tree file; Newick is picked by ``newick`` or by the file suffix."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if newick is None:
        newick = path.suffix.lower() in NEWICK_SUFFIXES
    return parse_newick(text) if newick else parse_edge_list(text)
