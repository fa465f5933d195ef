"""Text exports: cdd-style EXT/INE files, JSON reports and plain-text tables.

EXT rows are ``1 x_1 ... x_n`` (a vertex); INE rows are ``b a_1 ... a_n``
meaning ``b + a . x >= 0``, with the equalities listed first and named on a
``linearity`` line. Entries are exact, ``p/q`` or plain integers.
"""
import json
from fractions import Fraction

from ._extmath import format_rational
from .exceptions import MalformedPolyhedronFileError
from .polytope import HRep, LinearConstraint, VRep
from .polytope.base import format_label
from .tfp import ORIGIN

__all__ = [
    "format_ext",
    "format_ine",
    "read_ext",
    "read_ine",
    "vrep_to_dict",
    "hrep_to_dict",
    "to_json",
    "format_vertex_label",
    "format_trace",
    "format_decomposition",
]


def format_vertex_label(label):
    if label is None:
        return "-"
    if label == ORIGIN:
        return "0"
    if isinstance(label, tuple):
        return "-".join(map(str, label))
    return str(label)


def _row(values):
    return " ".join(format_rational(v) for v in values)


def _coordinate_comment(basis):
    return "* coordinates: " + " ".join(format_label(b) for b in basis)


def format_ext(V):
    lines = [_coordinate_comment(V.basis)]
    for k, label in enumerate(V.labels, 1):
        lines.append(f"* row {k}: {format_vertex_label(label)}")
    lines += ["V-representation", "begin", f"{len(V)} {V.ambient_dim + 1} rational"]
    lines += [_row((1,) + v.coords) for v in V.vertices]
    lines.append("end")
    return "\n".join(lines) + "\n"


def format_ine(H):
    rows = list(H.equalities) + list(H.inequalities)
    lines = [_coordinate_comment(H.basis)]
    for k, c in enumerate(rows, 1):
        descriptor = H.describe(c)
        lines.append(f"* row {k}: {c.format(H.basis)}" + (f"  [{descriptor}]" if descriptor else ""))
    lines.append("H-representation")
    if H.equalities:
        lines.append(f"linearity {len(H.equalities)} " + " ".join(str(k) for k in range(1, len(H.equalities) + 1)))
    lines += ["begin", f"{len(rows)} {len(H.basis) + 1} rational"]
    lines += [_row((-c.rhs,) + c.coeffs) for c in rows]
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_body(text, header):
    """Return ``(linearity indices, rows)`` of an EXT/INE file."""
    seen_header = False
    linearity = set()
    rows = None
    expected = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("*"):
            continue
        if rows is None:
            if line == header:
                seen_header = True
            elif line.startswith("linearity"):
                tokens = line.split()
                try:
                    count, indices = int(tokens[1]), [int(t) for t in tokens[2:]]
                except (IndexError, ValueError):
                    raise MalformedPolyhedronFileError(f"bad linearity line {line!r}", line=lineno) from None
                if count != len(indices):
                    raise MalformedPolyhedronFileError("linearity count does not match its indices", line=lineno)
                linearity.update(indices)
            elif line == "begin":
                if not seen_header:
                    raise MalformedPolyhedronFileError(f"missing {header!r} header", line=lineno)
                rows = []
            else:
                raise MalformedPolyhedronFileError(f"unexpected line {line!r}", line=lineno)
        elif expected is None:
            tokens = line.split()
            if len(tokens) != 3 or tokens[2] not in ("rational", "integer"):
                raise MalformedPolyhedronFileError(f"expected '<rows> <cols> rational', got {line!r}", line=lineno)
            expected = (int(tokens[0]), int(tokens[1]))
        elif line == "end":
            if len(rows) != expected[0]:
                raise MalformedPolyhedronFileError(f"{len(rows)} rows given, {expected[0]} declared", line=lineno)
            return linearity, rows
        else:
            try:
                values = [Fraction(t) for t in line.split()]
            except (ValueError, ZeroDivisionError):
                raise MalformedPolyhedronFileError(f"bad rational in {line!r}", line=lineno) from None
            if len(values) != expected[1]:
                raise MalformedPolyhedronFileError(f"row has {len(values)} entries, {expected[1]} declared",
                                                   line=lineno)
            rows.append(values)
    raise MalformedPolyhedronFileError("missing 'end'")


def read_ext(text, basis=None):
    """Parse an EXT file into a V-representation; only vertex rows are accepted."""
    _, rows = _parse_body(text, "V-representation")
    for k, row in enumerate(rows, 1):
        if row[0] != 1:
            raise MalformedPolyhedronFileError(f"row {k} is not a vertex (leading entry {row[0]})")
    n = len(rows[0]) - 1 if rows else 0
    return VRep(basis if basis is not None else range(1, n + 1), [row[1:] for row in rows])


def read_ine(text, basis=None):
    linearity, rows = _parse_body(text, "H-representation")
    n = len(rows[0]) - 1 if rows else 0
    inequalities, equalities = [], []
    for k, row in enumerate(rows, 1):
        if k in linearity:
            equalities.append(LinearConstraint.equality(row[1:], -row[0]))
        else:
            inequalities.append(LinearConstraint.inequality(row[1:], -row[0]))
    return HRep(basis if basis is not None else range(1, n + 1), inequalities, equalities)


def _constraint_dict(H, c):
    return {
        "coeffs": list(c.coeffs),
        "rhs": c.rhs,
        "kind": c.kind.value,
        "text": c.format(H.basis),
        "descriptor": H.describe(c),
    }


def hrep_to_dict(H):
    return {
        "basis": [format_label(b) for b in H.basis],
        "equalities": [_constraint_dict(H, c) for c in H.equalities],
        "inequalities": [_constraint_dict(H, c) for c in H.inequalities],
    }


def vrep_to_dict(V):
    return {
        "basis": [format_label(b) for b in V.basis],
        "vertices": [{"label": format_vertex_label(label), "coords": [format_rational(x) for x in v.coords]}
                     for v, label in zip(V.vertices, V.labels)],
    }


def to_json(obj):
    if isinstance(obj, VRep):
        obj = vrep_to_dict(obj)
    elif isinstance(obj, HRep):
        obj = hrep_to_dict(obj)
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _block(vertex):
    return " ".join(format_rational(x) for x in vertex.coords)


def format_trace(trace):
    """The Delta_3 class of every factor vertex and the matched pair table."""
    spec = trace.spec
    lines = []
    for side, tree, edge, rows in ((1, spec.tree1, spec.edge1, trace.factor1),
                                   (2, spec.tree2, spec.edge2, trace.factor2)):
        lines.append(f"# factor {side}: glued edge {edge}; coordinates " + " ".join(map(str, tree.edges)))
        for label, vertex, cls in rows:
            lines.append(f"{format_vertex_label(label):>8}  {_block(vertex)}  {cls}")
    lines.append("# matched pairs -> glued tree")
    width = len(spec.tree1.edges)
    for label1, label2, z, image in trace.pairs:
        left = " ".join(format_rational(x) for x in z.coords[:width])
        right = " ".join(format_rational(x) for x in z.coords[width:])
        pair = f"{format_vertex_label(label1)} | {format_vertex_label(label2)}"
        lines.append(f"{pair:>17}  {left} | {right}  ->  {_block(image)}")
    return "\n".join(lines) + "\n"


def format_decomposition(decomposition):
    lines = []
    for k, (star, instruction) in enumerate(decomposition, 1):
        center = next(u for u, nbrs in star.adjacency.items() if len(nbrs) > 1)
        leaves = [u for u, nbrs in star.adjacency.items() if len(nbrs) == 1]
        line = f"star {k}: center {center}, leaves {' '.join(leaves)}"
        if instruction is not None:
            line += f"; glue {instruction.edge1} to {instruction.edge2} -> {instruction.merged_edge}"
        lines.append(line)
    return "\n".join(lines) + "\n"
