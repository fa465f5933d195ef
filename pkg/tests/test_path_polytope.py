import warnings

import pytest

from pathpoly.exceptions import (BadParametersError, EqualEndpointsError, HasDegreeTwoInternalError,
                                 NonMinimalRepresentationWarning, NotALeafError, TooSmallError)
from pathpoly.oracle import Verdict, compare_hreps, minimal_hrep, redundant_inequalities
from pathpoly.path_polytope import (facet_descriptors, hrep_general, hrep_theorem_main, hypersimplex_hrep,
                                    hypersimplex_vrep, path_vertex, standard_star, star_hrep, vrep)
from pathpoly.polytope import (LinearConstraint, affine_dimension, canonicalize, contains, is_facet,
                               is_relative_interior, vertices_on_hyperplane)
from pathpoly.tree import Edge, Tree, degree_two_nodes, leaf_edges, leaves, parse_edge_list, trees_up_to

from . import measure_time
from .conftest import GLUED_STARS_VERTICES


@measure_time(budget=1)
def test_glued_stars_vertex_table(glued_stars) -> None:
    V = vrep(glued_stars)
    assert V.labels == tuple(GLUED_STARS_VERTICES)
    assert [v.coords for v in V.vertices] == list(GLUED_STARS_VERTICES.values())


def test_path_vertex_errors(glued_stars) -> None:
    with pytest.raises(NotALeafError):
        path_vertex(glued_stars, "1", "2")
    with pytest.raises(EqualEndpointsError):
        path_vertex(glued_stars, "2", "2")


def test_single_edge_vrep() -> None:
    V = vrep(Tree([("a", "b")]))
    assert [v.coords for v in V.vertices] == [(1,)]


def test_glued_stars_theorem_hrep(glued_stars) -> None:
    H = hrep_theorem_main(glued_stars)
    assert len(H.inequalities) == 6
    assert H.equalities == (LinearConstraint.equality([1, 1, 0, 1, 1], 2),)
    assert H.describe(H.equalities[0]) == "leaf-sum"
    assert sorted(H.describe(c) for c in H.inequalities) == [
        "G (1,2)", "G (1,3)", "G (1,5)", "G (5,1)", "G (5,6)", "G (5,7)"]
    for v in vrep(glued_stars).vertices:
        assert contains(H, v)


def test_s4_is_the_second_hypersimplex(s4) -> None:
    H = hrep_theorem_main(s4)
    assert len(H.inequalities) == 8
    assert len(H.equalities) == 1
    assert sum(1 for c in H.inequalities if H.describe(c).startswith("F")) == 4


def test_s3_boundary_case(s3) -> None:
    H = hrep_theorem_main(s3)
    assert len(H.inequalities) == 3
    assert all(H.describe(c).startswith("G") for c in H.inequalities)


@pytest.mark.parametrize("text, error", [
    ("a b\n", TooSmallError),
    ("a b\nb c\n", HasDegreeTwoInternalError),
    ("1 2\n1 3\n1 m\nm 4\n", HasDegreeTwoInternalError),
])
def test_theorem_hypotheses(text, error) -> None:
    with pytest.raises(error):
        hrep_theorem_main(parse_edge_list(text))


def test_facet_descriptor_incidence(glued_stars, s4) -> None:
    by_label = {d.label: d for d in facet_descriptors(glued_stars)}
    assert set(by_label["G (1,5)"].incident_vertices) == {("2", "6"), ("2", "7"), ("3", "6"), ("3", "7"), ("6", "7")}

    by_label = {d.label: d for d in facet_descriptors(s4)}
    assert set(by_label["G (0,4)"].incident_vertices) == {("1", "4"), ("2", "4"), ("3", "4")}
    assert set(by_label["F {0,4}"].incident_vertices) == {("1", "2"), ("1", "3"), ("2", "3")}
    with pytest.raises(TooSmallError):
        facet_descriptors(Tree([("a", "b")]))


ADMISSIBLE = [t for t in trees_up_to(8) if not degree_two_nodes(t) and len(t.nodes) > 3]


@pytest.mark.parametrize("tree", ADMISSIBLE)
def test_descriptors_match_tight_sets(tree) -> None:
    V = vrep(tree)
    for d in facet_descriptors(tree):
        assert set(vertices_on_hyperplane(V, d.constraint).labels) == set(d.incident_vertices)
        assert is_facet(V, d.constraint)


@pytest.mark.parametrize("tree", ADMISSIBLE)
def test_degree_three_exclusion(tree) -> None:
    V = vrep(tree)
    for edge in tree.edges:
        coeffs = [int(e == edge) for e in tree.edges]
        expected = tree.degree(edge.a) != 3 and tree.degree(edge.b) != 3
        assert is_facet(V, LinearConstraint.inequality(coeffs)) == expected


@pytest.mark.parametrize("tree", [t for t in trees_up_to(8) if len(t.nodes) > 2])
def test_dimension_law(tree) -> None:
    expected = len(tree.edges) - len(degree_two_nodes(tree)) - 1
    assert affine_dimension(vrep(tree)) == expected


@pytest.mark.parametrize("tree", [t for t in trees_up_to(8) if len(leaves(t)) > 2])
def test_membership_of_every_tree(tree) -> None:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonMinimalRepresentationWarning)
        H = hrep_general(tree)
    V = vrep(tree)
    assert is_relative_interior(H, V.barycenter())
    for v in V.vertices:
        assert contains(H, v) and not is_relative_interior(H, v)
    assert not contains(H, [0] * len(tree.edges))


def test_general_path() -> None:
    with pytest.warns(NonMinimalRepresentationWarning):
        H = hrep_general(parse_edge_list("a b\nb c\n"))
    assert set(H.equalities) == {LinearConstraint.equality([1, 1], 2), LinearConstraint.equality([1, -1])}
    assert H.inequalities == ()


def test_general_single_edge() -> None:
    H = hrep_general(Tree([("a", "b")]))
    assert H.equalities == (LinearConstraint.equality([1], 1),)


def test_general_without_degree_two_is_theorem(glued_stars) -> None:
    assert hrep_general(glued_stars) == hrep_theorem_main(glued_stars)


def test_general_subdivided_s3(subdivided_s3) -> None:
    with pytest.warns(NonMinimalRepresentationWarning):
        H = hrep_general(subdivided_s3)
    # basis {1,2} {1,3} {1,m} {4,m}
    assert LinearConstraint.equality([0, 0, 1, -1]) in H.equalities
    assert H.describe(LinearConstraint.equality([0, 0, 1, -1])) == "degree-2 m"
    result = compare_hreps(H, minimal_hrep(vrep(subdivided_s3)).hrep)
    assert result.same_polytope


def test_degree_two_redundancy_is_witnessed(subdivided_glued_stars) -> None:
    with pytest.warns(NonMinimalRepresentationWarning):
        H = hrep_general(subdivided_glued_stars)
    oracle = minimal_hrep(vrep(subdivided_glued_stars)).hrep
    assert compare_hreps(H, oracle).verdict is Verdict.EQUIVALENT

    x79 = LinearConstraint.inequality([int(e == Edge("7", "9")) for e in subdivided_glued_stars.edges])
    assert x79 in H.inequalities
    assert H.describe(x79) == "F {7,9}"
    assert redundant_inequalities(H) == [x79]
    assert x79 not in canonicalize(oracle).inequalities


def test_general_rows_use_the_tree_edges(subdivided_glued_stars) -> None:
    tree = subdivided_glued_stars
    with pytest.warns(NonMinimalRepresentationWarning):
        H = hrep_general(tree)
    leaf_sum = LinearConstraint.equality([int(e in leaf_edges(tree)) for e in tree.edges], 2)
    assert leaf_sum in H.equalities
    assert H.describe(leaf_sum) == "leaf-sum"
    labels = {H.describe(c) for c in H.inequalities}
    assert "G (5,9)" in labels and "G (5,7)" not in labels


@pytest.mark.parametrize("tree", [t for t in trees_up_to(8) if degree_two_nodes(t)])
def test_general_matches_oracle(tree) -> None:
    with pytest.warns(NonMinimalRepresentationWarning):
        H = hrep_general(tree)
    V = vrep(tree)
    assert compare_hreps(H, minimal_hrep(V).hrep).same_polytope
    for c in H.equalities:
        assert all(c.is_satisfied(v.coords) for v in V.vertices)
    for c in H.inequalities:
        _, named = H.describe(c).split(" ", 1)
        assert Edge.of(*named.strip("{}()").split(",")) in tree.edges


@measure_time(budget=5)
@pytest.mark.parametrize("n", range(3, 8))
def test_star_is_hypersimplex(n) -> None:
    star = standard_star(n)
    assert vrep(star).rebase(range(1, n + 1)) == hypersimplex_vrep(n, 2)
    facets = minimal_hrep(hypersimplex_vrep(n, 2)).facet_count
    assert facets == (3 if n == 3 else 2 * n)
    assert canonicalize(star_hrep(n)) == canonicalize(minimal_hrep(hypersimplex_vrep(n, 2)).hrep)


@pytest.mark.parametrize("n, k, vertices, facets", [(3, 2, 3, 3), (4, 2, 6, 8), (5, 1, 5, 5)])
def test_hypersimplex(n, k, vertices, facets) -> None:
    V = hypersimplex_vrep(n, k)
    assert len(V) == vertices
    assert minimal_hrep(V).facet_count == facets
    assert compare_hreps(hypersimplex_hrep(n, k), minimal_hrep(V).hrep).same_polytope


@pytest.mark.parametrize("n, k", [(3, 0), (3, 3), (2, 5)])
def test_hypersimplex_parameters(n, k) -> None:
    with pytest.raises(BadParametersError):
        hypersimplex_vrep(n, k)


def test_standard_star_labels() -> None:
    assert leaves(standard_star(10))[:2] == ["01", "02"]
