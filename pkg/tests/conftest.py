import pytest

from pathpoly.tree import Edge, GluingSpec, parse_edge_list, star_tree

GLUED_STARS = "1 2\n1 3\n1 5\n5 6\n5 7\n"

# columns {1,2} {1,3} {1,5} {5,6} {5,7}
GLUED_STARS_VERTICES = {
    ("2", "3"): (1, 1, 0, 0, 0),
    ("2", "6"): (1, 0, 1, 1, 0),
    ("2", "7"): (1, 0, 1, 0, 1),
    ("3", "6"): (0, 1, 1, 1, 0),
    ("3", "7"): (0, 1, 1, 0, 1),
    ("6", "7"): (0, 0, 0, 1, 1),
}


@pytest.fixture
def glued_stars():
    return parse_edge_list(GLUED_STARS)


@pytest.fixture
def s3():
    return star_tree("1", ["2", "3", "4"])


@pytest.fixture
def s4():
    return star_tree("0", ["1", "2", "3", "4"])


@pytest.fixture
def path3():
    return parse_edge_list("a b\nb c\n")


@pytest.fixture
def subdivided_s3():
    """S3 with the edge to leaf 4 split by node m."""
    return parse_edge_list("1 2\n1 3\n1 m\nm 4\n")


@pytest.fixture
def subdivided_glued_stars():
    """The glued stars with the edge {5,7} split by node 9."""
    return parse_edge_list("1 2\n1 3\n1 5\n5 6\n5 9\n9 7\n")


@pytest.fixture
def two_stars():
    return GluingSpec(star_tree("1", ["2", "3", "4"]), Edge.of("1", "4"),
                      star_tree("5", ["6", "7", "8"]), Edge.of("5", "8"))


@pytest.fixture
def tree_file(tmp_path):
    def write(text, name="tree.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
