import pytest

from pathpoly.exceptions import DuplicateLabelError, MalformedNewickError, TooFewNodesError
from pathpoly.tree import Tree, parse_newick


def test_star_with_unlabeled_center() -> None:
    assert parse_newick("(a,b,c);") == Tree([("_1", "a"), ("_1", "b"), ("_1", "c")])


def test_binary_root_is_suppressed() -> None:
    tree = parse_newick("((a,b),(c,d));")
    assert tree == Tree([("_1", "a"), ("_1", "b"), ("_2", "c"), ("_2", "d"), ("_1", "_2")])
    assert len(tree.edges) == 5


def test_labeled_binary_root_is_suppressed() -> None:
    assert parse_newick("(a,b)r;") == Tree([("a", "b")])
    tree = parse_newick("((a,b),(c,d))r;")
    assert tree == parse_newick("((a,b),(c,d));")
    assert "r" not in tree.nodes
    assert parse_newick("((2,3)1,(6,7)5);") == Tree([("1", "2"), ("1", "3"), ("1", "5"), ("5", "6"), ("5", "7")])


def test_labeled_root_of_degree_three_is_kept() -> None:
    assert parse_newick("(a,b,c)r;") == Tree([("r", "a"), ("r", "b"), ("r", "c")])


def test_branch_lengths_and_whitespace_are_ignored() -> None:
    assert parse_newick(" ( a:0.5 , b:1e-3 , c ) ;\n") == parse_newick("(a,b,c);")


def test_generated_labels_skip_used_names() -> None:
    tree = parse_newick("(_1,b,c);")
    assert "_2" in tree.nodes and "_1" in tree.nodes


@pytest.mark.parametrize("text", [
    "(a,b,c)",
    "(a,(b));",
    "(a,b,);",
    "((a,b);",
    "(a,b));",
    "(a,b,c); x",
    "(a:x,b,c);",
    "(a b,c,d);",
])
def test_malformed(text) -> None:
    with pytest.raises(MalformedNewickError):
        parse_newick(text)


def test_duplicate_label() -> None:
    with pytest.raises(DuplicateLabelError):
        parse_newick("(a,a,b);")


def test_single_node() -> None:
    with pytest.raises(TooFewNodesError):
        parse_newick("a;")


def test_error_line_number() -> None:
    with pytest.raises(MalformedNewickError, match="line 2"):
        parse_newick("(a,\nb));")
