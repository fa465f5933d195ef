"""Certification of the closed forms against the oracle.

The checks to run are listed in ``defaults.yml`` under ``certify.checks``;
each entry names the module and function implementing it, plus optional
keyword ``options``. A check takes a ``CertificationContext`` and returns a
``CheckResult``.
"""
import importlib
import logging
import warnings
from functools import cached_property
from math import comb
from typing import Any, NamedTuple, Optional, Tuple

from . import defaults
from .exceptions import CapExceededError, CertificationMismatch, NonMinimalRepresentationWarning
from .oracle import Verdict, assert_extremal, compare_hreps, minimal_hrep
from .path_polytope import facet_descriptors, hrep_general, leaf_pairs, path_vertex, vrep
from .polytope import (LinearConstraint, RationalVector, affine_dimension, contains, is_facet, is_relative_interior,
                       vertices_on_hyperplane)
from .tfp import free_join_with_origin, gluing_projections, lift_incidence, tfp_vrep, toric_fiber_product
from .tree import (Edge, contract_degree2, degree_two_nodes, fold_gluings, internal_nodes, leaf_edges, leaves,
                   split_at_edge, star_decomposition, trees_up_to)

__all__ = [
    "CheckResult",
    "CertificationContext",
    "CheckRegistry",
    "TreeReport",
    "certify_tree",
    "certify_all_trees",
    "raise_on_failure",
]

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"
FAULT = "injected fault"


class CheckResult(NamedTuple):
    name: str
    status: str
    detail: str = ""
    witness: Optional[Any] = None

    @property
    def failed(self):
        return self.status == FAIL


class CertificationContext:
    """Lazily computed objects shared by the checks of one tree."""

    def __init__(self, tree, inject_fault=False, cap=None):
        self.tree = tree
        self.inject_fault = inject_fault
        self.cap = cap

    @cached_property
    def vrep(self):
        return vrep(self.tree)

    @cached_property
    def report(self):
        return minimal_hrep(self.vrep, self.cap)

    @cached_property
    def closed_form(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonMinimalRepresentationWarning)
            return hrep_general(self.tree)

    @cached_property
    def contracted(self):
        return contract_degree2(self.tree)

    @property
    def admissible(self):
        """No internal degree-2 node and more than three nodes."""
        return not degree_two_nodes(self.tree) and len(self.tree.nodes) > 3

    def internal_edges(self, tree):
        return [e for e in tree.edges if not (tree.is_leaf(e.a) or tree.is_leaf(e.b))]


def _result(name, ok, detail="", witness=None):
    return CheckResult(name, PASS if ok else FAIL, "" if ok else detail, None if ok else witness)


def check_extremality(ctx):
    return _result("extremality", assert_extremal(ctx.vrep, ctx.cap), "a path vector is not a vertex")


def check_vertex_count(ctx):
    expected = comb(len(leaves(ctx.tree)), 2)
    return _result("vertex_count", len(ctx.vrep) == expected, f"{len(ctx.vrep)} vertices, expected {expected}")


def check_leaf_edge_sum(ctx):
    if len(ctx.tree.edges) < 2:
        return CheckResult("leaf_edge_sum", SKIP, "single edge")
    indices = [ctx.tree.edge_index(e) for e in leaf_edges(ctx.tree)]
    for label, v in zip(ctx.vrep.labels, ctx.vrep.vertices):
        if sum(v.coords[i] for i in indices) != 2:
            return _result("leaf_edge_sum", False, f"leaf-edge sum of {label} is not 2", v)
    return _result("leaf_edge_sum", True)


def check_dimension_law(ctx):
    if len(ctx.tree.nodes) <= 2:
        return CheckResult("dimension_law", SKIP, "two nodes")
    expected = len(ctx.tree.edges) - len(degree_two_nodes(ctx.tree)) - 1
    dim = affine_dimension(ctx.vrep)
    return _result("dimension_law", dim == expected, f"dimension {dim}, expected {expected}")


def _fault(tree):
    edge = leaf_edges(tree)[0]
    coeffs = [0] * len(tree.edges)
    coeffs[tree.edge_index(edge)] = -1
    return LinearConstraint.inequality(coeffs, 0)


def check_closed_form_hrep(ctx):
    """The closed form must be EQUAL to the oracle; the degree-2 form may be EQUIVALENT."""
    H = ctx.closed_form
    if ctx.inject_fault:
        H = H.with_inequality(_fault(ctx.tree), FAULT)
    result = compare_hreps(H, ctx.report.hrep, ctx.cap)
    if result.verdict is Verdict.DIFFERENT:
        return _result("closed_form_hrep", False, result.detail, result.witness)
    if ctx.admissible and result.verdict is not Verdict.EQUAL:
        return _result("closed_form_hrep", False, "closed form is equivalent but not equal to the oracle")
    return _result("closed_form_hrep", True)


def check_facet_incidence(ctx):
    if not ctx.admissible:
        return CheckResult("facet_incidence", SKIP, "not in closed-form range")
    for d in facet_descriptors(ctx.tree):
        tight = set(vertices_on_hyperplane(ctx.vrep, d.constraint).labels)
        if tight != set(d.incident_vertices):
            return _result("facet_incidence", False, f"{d.label}: incident pairs differ from the tight set",
                           sorted(tight ^ set(d.incident_vertices)))
        if not is_facet(ctx.vrep, d.constraint):
            return _result("facet_incidence", False, f"{d.label} is not a facet")
    return _result("facet_incidence", True)


def check_degree_three_exclusion(ctx):
    if not ctx.admissible:
        return CheckResult("degree_three_exclusion", SKIP, "not in closed-form range")
    tree = ctx.tree
    for edge in tree.edges:
        coeffs = [0] * len(tree.edges)
        coeffs[tree.edge_index(edge)] = 1
        expected = tree.degree(edge.a) != 3 and tree.degree(edge.b) != 3
        if is_facet(ctx.vrep, LinearConstraint.inequality(coeffs, 0)) != expected:
            return _result("degree_three_exclusion", False, f"x{edge} >= 0: facet status is not {expected}")
    return _result("degree_three_exclusion", True)


def check_contraction(ctx):
    contracted, embedding = ctx.contracted
    again, identity = contract_degree2(contracted)
    if again != contracted or identity.source_basis != identity.target_basis:
        return _result("contraction", False, "contraction is not idempotent")
    if leaves(contracted) != leaves(ctx.tree):
        return _result("contraction", False, "contraction changed the leaf set")
    if not embedding.is_injective():
        return _result("contraction", False, "the contraction embedding is not injective")
    for i, j in leaf_pairs(contracted):
        if embedding(path_vertex(contracted, i, j)) != path_vertex(ctx.tree, i, j):
            return _result("contraction", False, f"path vector of {i}-{j} is not preserved", (i, j))
    return _result("contraction", True)


def check_degree_two_equalities(ctx):
    twos = degree_two_nodes(ctx.tree)
    if not twos:
        return CheckResult("degree_two_equalities", SKIP, "no internal degree-2 node")
    for u in twos:
        i, j = (ctx.tree.edge_index(Edge.of(u, v)) for v in ctx.tree.neighbors(u))
        for label, x in zip(ctx.vrep.labels, ctx.vrep.vertices):
            if x.coords[i] != x.coords[j]:
                return _result("degree_two_equalities", False, f"path {label} breaks the equality at {u}", x)
    return _result("degree_two_equalities", True)


def check_star_decomposition(ctx):
    contracted, _ = ctx.contracted
    if not internal_nodes(contracted):
        return CheckResult("star_decomposition", SKIP, "no internal node")
    decomposition = star_decomposition(contracted)
    if len(decomposition) != len(internal_nodes(contracted)):
        return _result("star_decomposition", False, "one star per internal node expected")
    return _result("star_decomposition", fold_gluings(decomposition) == contracted,
                   "folding the stars does not rebuild the tree")


def check_tfp_reconstruction(ctx):
    contracted, _ = ctx.contracted
    splits = ctx.internal_edges(contracted)
    if not splits:
        return CheckResult("tfp_reconstruction", SKIP, "no internal edge")
    target = vrep(contracted)
    for edge in splits:
        spec = split_at_edge(contracted, edge)
        glued = tfp_vrep(spec)
        if glued != target:
            return _result("tfp_reconstruction", False, f"split at {edge}: phi(TFP) differs from P_T",
                           sorted(glued.vertex_set() ^ target.vertex_set()))
        p1, p2 = gluing_projections(spec)
        product = toric_fiber_product(free_join_with_origin(vrep(spec.tree1)),
                                      free_join_with_origin(vrep(spec.tree2)), p1, p2)
        expected = affine_dimension(vrep(spec.tree1)) + affine_dimension(vrep(spec.tree2))
        if affine_dimension(product) != expected:
            return _result("tfp_reconstruction", False, f"split at {edge}: TFP dimension is not {expected}")
    return _result("tfp_reconstruction", True)


def check_free_join_face_law(ctx):
    if len(ctx.tree.edges) < 2 or ctx.report.affine_dim < 1:
        return CheckResult("free_join_face_law", SKIP, "polytope is a point")
    joined = minimal_hrep(free_join_with_origin(ctx.vrep), ctx.cap)
    expected = ctx.report.facet_count + 1
    return _result("free_join_face_law", joined.facet_count == expected,
                   f"join has {joined.facet_count} facets, expected {expected}")


def check_facet_inheritance(ctx, max_edges=6):
    """Every facet of a fiber product lifts a facet of one factor."""
    contracted, _ = ctx.contracted
    splits = ctx.internal_edges(contracted)
    if not splits or len(contracted.edges) > max_edges:
        return CheckResult("facet_inheritance", SKIP, "no internal edge or tree too large")
    for edge in splits:
        spec = split_at_edge(contracted, edge)
        joined = [free_join_with_origin(vrep(spec.tree1)), free_join_with_origin(vrep(spec.tree2))]
        product = toric_fiber_product(*joined, *gluing_projections(spec))
        lifted = set()
        for side, factor in ((1, joined[0]), (2, joined[1])):
            for c in minimal_hrep(factor, ctx.cap).facet_constraints:
                face = vertices_on_hyperplane(factor, c).labels
                lifted.add(lift_incidence(product, face, side))
        for c in minimal_hrep(product, ctx.cap).facet_constraints:
            tight = frozenset(k for k, z in enumerate(product.vertices) if c.is_tight(z.coords))
            if tight not in lifted:
                return _result("facet_inheritance", False, f"split at {edge}: facet {c.format(product.basis)} "
                                                           "is not lifted from a factor")
    return _result("facet_inheritance", True)


def check_membership(ctx):
    H = ctx.closed_form
    center = ctx.vrep.barycenter()
    if not contains(H, center):
        return _result("membership", False, "barycenter is outside", center)
    if ctx.report.facet_count >= 2 and not is_relative_interior(H, center):
        return _result("membership", False, "barycenter is on the boundary", center)
    for v in ctx.vrep.vertices:
        if not contains(H, v):
            return _result("membership", False, "vertex is outside", v)
        if H.inequalities and is_relative_interior(H, v):
            return _result("membership", False, "vertex is in the relative interior", v)
    origin = RationalVector.zeros(ctx.tree.edges)
    return _result("membership", not contains(H, origin), "origin is inside", origin)


def _resolve_check(name, entry) -> Any:
    try:
        return getattr(importlib.import_module(entry["module"]), entry["function"])
    except (ImportError, AttributeError) as e:
        raise ValueError(f"check {name!r}: cannot resolve {entry['module']}.{entry['function']}") from e


class CheckRegistry:
    """Check functions resolved from a ``{name: {module, function, options}}`` mapping."""

    def __init__(self, config=None):
        config = defaults["certify"]["checks"] if config is None else config
        self.descriptions = {name: entry.get("description", "") for name, entry in config.items()}
        self.options = {name: entry.get("options") or {} for name, entry in config.items()}
        self.checks = {name: _resolve_check(name, entry) for name, entry in config.items()}

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def run(self, ctx, names=None):
        results = []
        for name in names or self.checks:
            result = self.checks[name](ctx, **self.options[name])
            logger.debug("%s %s: %s %s", ctx.tree, name, result.status, result.detail)
            results.append(result)
        return results


class TreeReport(NamedTuple):
    tree: Any
    n_vertices: int
    dim: int
    n_facets: int
    results: Tuple[CheckResult, ...]

    @property
    def passed(self):
        return not any(r.failed for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if r.failed]


def certify_tree(tree, inject_fault=False, cap=None, registry=None):
    registry = registry or CheckRegistry()
    ctx = CertificationContext(tree, inject_fault, cap)
    results = tuple(registry.run(ctx))
    report = TreeReport(tree, len(ctx.vrep), ctx.report.affine_dim, ctx.report.facet_count, results)
    logger.info("%r: %d vertices, dim %d, %d facets, %s", tree, report.n_vertices, report.dim, report.n_facets,
                "pass" if report.passed else "FAIL")
    return report


def certify_all_trees(max_edges, inject_fault=False, cap=None, registry=None):
    """Certify one representative of every tree shape with at most ``max_edges`` edges.

    Raises
    ------
    CapExceededError
        Above ``certify.max_edges`` from the defaults.
    """
    limit = defaults["certify"]["max_edges"]
    if max_edges > limit:
        raise CapExceededError(f"exhaustive certification is limited to {limit} edges, got {max_edges}")
    registry = registry or CheckRegistry()
    return [certify_tree(tree, inject_fault, cap, registry) for tree in trees_up_to(max_edges)]


def raise_on_failure(reports):
    failed = [(report, result) for report in reports for result in report.failures]
    if failed:
        report, result = failed[0]
        witness = f" (witness {result.witness})" if result.witness is not None else ""
        raise CertificationMismatch(f"{len(failed)} failed checks; first: {report.tree!r} {result.name}: "
                                    f"{result.detail}{witness}")
