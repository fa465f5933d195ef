"""Command line interface: ``pathpoly <command> ...``.

Exit status: 0 success, 1 usage or input format error, 2 violated
mathematical precondition, 3 certification mismatch.
"""
import argparse
import logging
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from ..certify import certify_all_trees, certify_tree, raise_on_failure
from ..exceptions import (DimensionMismatchError, HasDegreeTwoInternalError, InputFormatError,
                          NonMinimalRepresentationWarning, PathPolyError, TooSmallError)
from ..formats import format_decomposition, format_ext, format_ine, format_trace, to_json
from ..path_polytope import hrep_general, hrep_theorem_main, vrep
from ..polytope import is_relative_interior, violated_constraints
from ..tfp import GluingSpec, tfp_trace
from ..tree import Edge, glue, read_tree, star_decomposition

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text, output):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(args, path):
    return read_tree(path, newick=args.newick)


def _parse_edge(text):
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected an edge as 'u,v', got {text!r}")
    return Edge.of(*parts)


def _parse_cap(text):
    try:
        coords, vertices = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected '<coords>,<vertices>', got {text!r}") from None
    return coords, vertices


def _read_point(path):
    tokens = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        tokens += line.split("#", 1)[0].split()
    try:
        return [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(f"point file {path} holds a non-rational entry") from None


def _general_hrep(tree):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NonMinimalRepresentationWarning)
        H = hrep_general(tree)
    for w in caught:
        logger.info("%s", w.message)
    return H


def cmd_vrep(args):
    V = vrep(_read(args, args.tree_file))
    _emit(to_json(V) if args.format == "json" else format_ext(V), args.output)
    return 0


def cmd_hrep(args):
    tree = _read(args, args.tree_file)
    if args.general:
        H = _general_hrep(tree)
    else:
        try:
            H = hrep_theorem_main(tree)
        except (TooSmallError, HasDegreeTwoInternalError) as e:
            raise type(e)(f"{e}; rerun with --general") from e
    H = H.sorted()
    _emit(to_json(H) if args.format == "json" else format_ine(H), args.output)
    return 0


def cmd_member(args):
    tree = _read(args, args.tree_file)
    point = _read_point(args.point_file)
    if len(point) != len(tree.edges):
        raise DimensionMismatchError(f"point has {len(point)} coordinates, the tree has {len(tree.edges)} edges")
    H = _general_hrep(tree)
    violated = violated_constraints(H, point)
    if violated:
        c = violated[0]
        descriptor = H.describe(c)
        print("OUT")
        print(f"violated: {c.format(H.basis)}" + (f"  [{descriptor}]" if descriptor else ""))
    elif is_relative_interior(H, point):
        print("IN relative-interior")
    else:
        print("IN boundary")
    return 0


def cmd_certify(args):
    if args.all_trees_up_to is not None:
        reports = certify_all_trees(args.all_trees_up_to, args.inject_fault, args.cap)
    elif args.tree_file:
        reports = [certify_tree(_read(args, args.tree_file), args.inject_fault, args.cap)]
    else:
        raise InputFormatError("give a tree file or --all-trees-up-to")

    print(f"{'tree':<40} {'|V|':>4} {'dim':>4} {'#facets':>8}  status")
    for report in reports:
        name = " ".join(f"{e.a}-{e.b}" for e in report.tree.edges)
        status = "pass" if report.passed else "FAIL"
        print(f"{name:<40} {report.n_vertices:>4} {report.dim:>4} {report.n_facets:>8}  {status}")
        for result in report.failures:
            witness = f" witness {result.witness}" if result.witness is not None else ""
            print(f"  {result.name}: {result.detail}{witness}")
    raise_on_failure(reports)
    return 0


def cmd_glue(args):
    tree1, tree2 = _read(args, args.tree_file1), _read(args, args.tree_file2)
    tree, origins = glue(tree1, args.edge1, tree2, args.edge2, args.merged_name)
    logger.info("merged edge %s", origins.name_of(origins.merged_edge))
    # validated before any output is written
    trace = tfp_trace(GluingSpec(tree1, args.edge1, tree2, args.edge2)) if args.trace else None
    header = f"# {origins.merged_edge_name} = {origins.merged_edge}\n" if args.merged_name else ""
    _emit(header + tree.to_edge_list(), args.output)
    if trace is not None:
        Path(args.trace).write_text(format_trace(trace), encoding="utf-8")
    return 0


def cmd_decompose(args):
    _emit(format_decomposition(star_decomposition(_read(args, args.tree_file))), args.output)
    return 0


def build_parser():
    parser = ArgumentParser(prog="pathpoly", description="Exact path polytopes of trees.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    parser.add_argument("--newick", action="store_true", default=None,
                        help="read tree files as Newick regardless of their suffix")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    p = subparsers.add_parser("vrep", help="vertices of the path polytope")
    p.add_argument("tree_file")
    p.add_argument("--format", choices=("ext", "json"), default="ext")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_vrep)

    p = subparsers.add_parser("hrep", help="closed-form H-representation")
    p.add_argument("tree_file")
    p.add_argument("--general", action="store_true", help="allow degree-2 nodes and small trees")
    p.add_argument("--format", choices=("ine", "json"), default="ine")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hrep)

    p = subparsers.add_parser("member", help="membership test for a point")
    p.add_argument("tree_file")
    p.add_argument("point_file")
    p.set_defaults(func=cmd_member)

    p = subparsers.add_parser("certify", help="check the closed forms against the oracle")
    p.add_argument("tree_file", nargs="?")
    p.add_argument("--all-trees-up-to", type=int, metavar="E")
    p.add_argument("--inject-fault", action="store_true", help="add an invalid inequality (test mode)")
    p.add_argument("--cap", type=_parse_cap, help="oracle cap '<coords>,<vertices>'")
    p.set_defaults(func=cmd_certify)

    p = subparsers.add_parser("glue", help="glue two trees along leaf edges")
    p.add_argument("tree_file1")
    p.add_argument("edge1", type=_parse_edge)
    p.add_argument("tree_file2")
    p.add_argument("edge2", type=_parse_edge)
    p.add_argument("-o", "--output")
    p.add_argument("--trace", metavar="PATH", help="write the fiber product table")
    p.add_argument("--merged-name", metavar="NAME", help="name the merged edge in a header comment")
    p.set_defaults(func=cmd_glue)

    p = subparsers.add_parser("decompose", help="star decomposition")
    p.add_argument("tree_file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(format="[pathpoly]: %(message)s", level=LOG_LEVELS[min(args.verbose, 2)])
    try:
        return args.func(args)
    except PathPolyError as e:
        print(f"pathpoly: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"pathpoly: {e}", file=sys.stderr)
        return 1
