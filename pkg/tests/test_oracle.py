from fractions import Fraction

import pytest

from pathpoly.exceptions import BasisMismatchError, CapExceededError, EmptyVRepError, UnboundedError
from pathpoly.oracle import (Verdict, assert_extremal, compare_hreps, minimal_hrep, resolve_cap,
                             vertices_from_hrep)
from pathpoly.path_polytope import hrep_theorem_main, hypersimplex_hrep, hypersimplex_vrep, vrep
from pathpoly.polytope import HRep, LinearConstraint, VRep, canonicalize, contains
from pathpoly.tree import degree_two_nodes, trees_up_to

from . import measure_time

TRIANGLE = hypersimplex_vrep(3, 2)


def test_vertices_of_small_systems() -> None:
    square = HRep((1, 2), [LinearConstraint.inequality([1, 0]), LinearConstraint.inequality([0, 1]),
                           LinearConstraint.inequality([-1, 0], -1), LinearConstraint.inequality([0, -1], -1)])
    assert [v.coords for v in vertices_from_hrep(square).vertices] == [(1, 1), (1, 0), (0, 1), (0, 0)]
    infeasible = HRep((1,), [LinearConstraint.inequality([1], 1), LinearConstraint.inequality([-1])])
    assert len(vertices_from_hrep(infeasible)) == 0
    line = HRep((1, 2), [], [LinearConstraint.equality([1, 1], 1)])
    with pytest.raises(UnboundedError):
        vertices_from_hrep(line)


def test_triangle() -> None:
    report = minimal_hrep(TRIANGLE)
    assert report.affine_dim == 2
    assert report.facet_count == 3
    assert report.equality_constraints == (LinearConstraint.equality([1, 1, 1], 2),)
    assert report.input_vertex_count == 3
    for c in report.facet_constraints:
        assert all(c.is_satisfied(v.coords) for v in TRIANGLE.vertices)


def test_point_and_segment() -> None:
    point = minimal_hrep(VRep((1, 2), [(1, 2)]))
    assert point.affine_dim == 0 and point.facet_count == 0
    assert len(point.equality_constraints) == 2
    segment = minimal_hrep(VRep((1, 2), [(0, 0), (2, 2)]))
    assert segment.facet_count == 2
    with pytest.raises(EmptyVRepError):
        minimal_hrep(VRep((1,), []))


def test_oracle_is_deterministic(glued_stars) -> None:
    assert minimal_hrep(vrep(glued_stars)).hrep == minimal_hrep(vrep(glued_stars)).hrep


def test_extremality() -> None:
    assert assert_extremal(hypersimplex_vrep(4, 2))
    third = Fraction(2, 3)
    assert not assert_extremal(TRIANGLE.with_vertex((third, third, third)))


def test_cap(monkeypatch) -> None:
    monkeypatch.delenv("PATHPOLY_ORACLE_CAP", raising=False)
    assert resolve_cap() == (12, 100)
    assert resolve_cap((3, 5)) == (3, 5)
    monkeypatch.setenv("PATHPOLY_ORACLE_CAP", "4")
    assert resolve_cap() == (4, 100)
    monkeypatch.setenv("PATHPOLY_ORACLE_CAP", "4,2")
    with pytest.raises(CapExceededError):
        minimal_hrep(TRIANGLE)
    monkeypatch.setenv("PATHPOLY_ORACLE_CAP", "four")
    with pytest.raises(ValueError, match="PATHPOLY_ORACLE_CAP"):
        resolve_cap()


def test_explicit_cap_wins(monkeypatch) -> None:
    monkeypatch.setenv("PATHPOLY_ORACLE_CAP", "1,1")
    assert minimal_hrep(TRIANGLE, cap=(3, 3)).facet_count == 3
    monkeypatch.delenv("PATHPOLY_ORACLE_CAP")
    with pytest.raises(CapExceededError):
        minimal_hrep(hypersimplex_vrep(13, 1))


def test_vertices_from_hrep() -> None:
    V = vertices_from_hrep(hypersimplex_hrep(4, 2))
    assert V == hypersimplex_vrep(4, 2)
    unbounded = HRep((1, 2), [LinearConstraint.inequality([1, 0]), LinearConstraint.inequality([0, 1])])
    with pytest.raises(UnboundedError):
        vertices_from_hrep(unbounded)


def test_compare_verdicts() -> None:
    g_form = minimal_hrep(TRIANGLE).hrep
    assert compare_hreps(g_form, g_form).verdict is Verdict.EQUAL
    boxed = HRep((1, 2, 3), [LinearConstraint.inequality([1 if i == j else 0 for j in range(3)]) for i in range(3)]
                 + [LinearConstraint.inequality([-1 if i == j else 0 for j in range(3)], -1) for i in range(3)],
                 [LinearConstraint.equality([1, 1, 1], 2)])
    assert compare_hreps(boxed, g_form).verdict in (Verdict.EQUAL, Verdict.EQUIVALENT)

    padded = HRep((1, 2, 3, 4), [LinearConstraint.inequality([int(i == j) for j in range(4)]) for i in range(4)]
                  + [LinearConstraint.inequality([-int(i == j) for j in range(4)], -1) for i in range(4)],
                  [LinearConstraint.equality([1, 1, 1, 0], 2), LinearConstraint.equality([0, 0, 0, 1])])
    result = compare_hreps(hypersimplex_hrep(4, 2), padded)
    assert result.verdict is Verdict.DIFFERENT
    assert result.witness is not None
    assert not (contains(padded, result.witness) and contains(hypersimplex_hrep(4, 2), result.witness))
    with pytest.raises(BasisMismatchError):
        compare_hreps(g_form, padded)


@measure_time
@pytest.mark.parametrize("tree", [t for t in trees_up_to(8) if not degree_two_nodes(t) and len(t.nodes) > 3])
def test_theorem_equals_oracle(tree) -> None:
    report = minimal_hrep(vrep(tree))
    assert canonicalize(hrep_theorem_main(tree)) == canonicalize(report.hrep)
    assert compare_hreps(hrep_theorem_main(tree), report.hrep).verdict is Verdict.EQUAL
