"""Exact V- and H-representations over a named coordinate basis."""
from enum import Enum
from fractions import Fraction

import numpy as np

from .._extmath import as_fraction, dot, format_rational, integerize
from ..exceptions import BasisMismatchError, ZeroConstraintError

__all__ = [
    "RationalVector",
    "VRep",
    "ConstraintKind",
    "LinearConstraint",
    "HRep",
    "format_label",
]


def format_label(label):
    return str(label)


class RationalVector:
    """A point of Q^basis.

    Parameters
    ----------
    basis : tuple
        Coordinate labels; tree edges for path polytopes, integers for
        abstract spaces.
    coords : sequence
        One exact rational per basis label.
    """

    __slots__ = ("basis", "coords")

    def __init__(self, basis, coords):
        basis = tuple(basis)
        coords = tuple(as_fraction(c) for c in coords)
        if len(coords) != len(basis):
            raise BasisMismatchError(f"{len(coords)} coordinates given for a basis of size {len(basis)}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("RationalVector is immutable")

    @classmethod
    def zeros(cls, basis):
        return cls(basis, [0] * len(tuple(basis)))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, key):
        if isinstance(key, int):
            return self.coords[key]
        return self.coords[self.basis.index(key)]

    def __eq__(self, other):
        if not isinstance(other, RationalVector):
            return NotImplemented
        return self.basis == other.basis and self.coords == other.coords

    def __hash__(self):
        return hash((self.basis, self.coords))

    def __repr__(self):
        return "RationalVector(" + ", ".join(format_rational(c) for c in self.coords) + ")"

    def is_zero(self):
        return not any(self.coords)

    def to_array(self):
        out = np.empty(len(self.coords), dtype=object)
        out[:] = self.coords
        return out


class VRep:
    """A polytope as the convex hull of finitely many points.

    Points are deduplicated on construction, keeping the first occurrence
    and its label. Labels are free-form tags (leaf pairs for path polytopes)
    and take no part in equality.
    """

    def __init__(self, basis, vertices, labels=None):
        self.basis = tuple(basis)
        vertices = list(vertices)
        if labels is None:
            labels = [None] * len(vertices)
        labels = list(labels)
        if len(labels) != len(vertices):
            raise ValueError("one label per vertex is required")

        seen = set()
        kept, kept_labels = [], []
        for vertex, label in zip(vertices, labels):
            if isinstance(vertex, RationalVector):
                if vertex.basis != self.basis:
                    raise BasisMismatchError("vertex basis differs from the V-representation basis")
            else:
                vertex = RationalVector(self.basis, vertex)
            if vertex.coords in seen:
                continue
            seen.add(vertex.coords)
            kept.append(vertex)
            kept_labels.append(label)
        self.vertices = tuple(kept)
        self.labels = tuple(kept_labels)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, VRep):
            return NotImplemented
        return self.basis == other.basis and self.vertex_set() == other.vertex_set()

    def __hash__(self):
        return hash((self.basis, self.vertex_set()))

    def __repr__(self):
        return f"VRep({len(self.vertices)} vertices in Q^{len(self.basis)})"

    @property
    def ambient_dim(self):
        return len(self.basis)

    @property
    def matrix(self):
        """Vertices as the rows of an object array of ``Fraction``."""
        out = np.empty((len(self.vertices), len(self.basis)), dtype=object)
        for i, vertex in enumerate(self.vertices):
            out[i, :] = vertex.coords
        return out

    def vertex_set(self):
        return frozenset(v.coords for v in self.vertices)

    def barycenter(self):
        if not self.vertices:
            raise ValueError("the barycenter of an empty V-representation is undefined")
        total = self.matrix.sum(axis=0)
        return RationalVector(self.basis, [Fraction(t) / len(self.vertices) for t in total])

    def subset(self, indices):
        indices = list(indices)
        return VRep(self.basis, [self.vertices[i] for i in indices], [self.labels[i] for i in indices])

    def with_vertex(self, vertex, label=None):
        return VRep(self.basis, list(self.vertices) + [vertex], list(self.labels) + [label])

    def rebase(self, basis):
        """Same coordinates, relabeled basis of equal size."""
        basis = tuple(basis)
        if len(basis) != len(self.basis):
            raise BasisMismatchError(f"cannot rebase {len(self.basis)} coordinates onto {len(basis)} labels")
        return VRep(basis, [v.coords for v in self.vertices], self.labels)


class ConstraintKind(Enum):
    INEQUALITY = ">="
    EQUALITY = "="


class LinearConstraint:
    """``coeffs . x >= rhs`` or ``coeffs . x = rhs`` with primitive integers.

    Rational input is scaled by the lcm of its denominators and divided by
    the gcd of everything. Equalities are sign-normalized so that the first
    nonzero coefficient is positive.
    """

    __slots__ = ("coeffs", "rhs", "kind")

    def __init__(self, coeffs, rhs, kind=ConstraintKind.INEQUALITY):
        values = [as_fraction(c) for c in coeffs] + [as_fraction(rhs)]
        if not any(values[:-1]):
            raise ZeroConstraintError("a linear constraint needs a nonzero coefficient vector")
        ints = integerize(values)
        if kind is ConstraintKind.EQUALITY:
            first = next(c for c in ints[:-1] if c != 0)
            if first < 0:
                ints = [-c for c in ints]
        object.__setattr__(self, "coeffs", tuple(ints[:-1]))
        object.__setattr__(self, "rhs", ints[-1])
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("LinearConstraint is immutable")

    @classmethod
    def inequality(cls, coeffs, rhs=0):
        return cls(coeffs, rhs, ConstraintKind.INEQUALITY)

    @classmethod
    def equality(cls, coeffs, rhs=0):
        return cls(coeffs, rhs, ConstraintKind.EQUALITY)

    @property
    def is_equality(self):
        return self.kind is ConstraintKind.EQUALITY

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LinearConstraint):
            return NotImplemented
        return (self.kind, self.coeffs, self.rhs) == (other.kind, other.coeffs, other.rhs)

    def __hash__(self):
        return hash((self.kind, self.coeffs, self.rhs))

    def sort_key(self):
        return (self.kind is ConstraintKind.INEQUALITY, tuple(-c for c in self.coeffs), -self.rhs)

    def evaluate(self, x):
        return dot(self.coeffs, x)

    def slack(self, x):
        return self.evaluate(x) - self.rhs

    def is_satisfied(self, x):
        s = self.slack(x)
        return s == 0 if self.is_equality else s >= 0

    def is_tight(self, x):
        return self.slack(x) == 0

    def format(self, basis=None):
        if basis is None:
            basis = range(1, len(self.coeffs) + 1)
        terms = []
        for c, label in zip(self.coeffs, basis):
            if c == 0:
                continue
            name = f"x{format_label(label)}"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}{name}")
        text = " ".join(terms)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        return f"{text} {self.kind.value} {self.rhs}"

    def __repr__(self):
        return f"LinearConstraint({self.format()})"


class HRep:
    """Inequalities plus equalities over a basis.

    Parameters
    ----------
    basis : tuple
    inequalities, equalities : iterable of LinearConstraint
        Duplicates are dropped, first occurrence wins.
    descriptors : dict, optional
        Maps constraints to human-readable provenance tags such as
        ``"G (1,5)"``; carried into JSON exports.
    """

    def __init__(self, basis, inequalities=(), equalities=(), descriptors=None):
        self.basis = tuple(basis)
        self.inequalities = self._collect(inequalities, ConstraintKind.INEQUALITY)
        self.equalities = self._collect(equalities, ConstraintKind.EQUALITY)
        self.descriptors = dict(descriptors or {})

    def _collect(self, constraints, kind):
        out = []
        for c in constraints:
            if len(c) != len(self.basis):
                raise BasisMismatchError(f"constraint over {len(c)} coordinates, basis has {len(self.basis)}")
            if c.kind is not kind:
                raise ValueError(f"expected {kind.name.lower()} constraints, got {c!r}")
            if c not in out:
                out.append(c)
        return tuple(out)

    @property
    def constraints(self):
        return self.equalities + self.inequalities

    def __eq__(self, other):
        if not isinstance(other, HRep):
            return NotImplemented
        return (self.basis == other.basis
                and set(self.inequalities) == set(other.inequalities)
                and set(self.equalities) == set(other.equalities))

    def __hash__(self):
        return hash((self.basis, frozenset(self.inequalities), frozenset(self.equalities)))

    def __repr__(self):
        return f"HRep({len(self.inequalities)} inequalities, {len(self.equalities)} equalities in Q^{len(self.basis)})"

    def describe(self, constraint):
        return self.descriptors.get(constraint, "")

    def sorted(self):
        """Same constraints in canonical order, descriptors kept."""
        return HRep(self.basis,
                    sorted(self.inequalities, key=LinearConstraint.sort_key),
                    sorted(self.equalities, key=LinearConstraint.sort_key),
                    self.descriptors)

    def with_inequality(self, constraint, descriptor=None):
        descriptors = dict(self.descriptors)
        if descriptor:
            descriptors[constraint] = descriptor
        return HRep(self.basis, self.inequalities + (constraint,), self.equalities, descriptors)

    def rebase(self, basis):
        basis = tuple(basis)
        if len(basis) != len(self.basis):
            raise BasisMismatchError(f"cannot rebase {len(self.basis)} coordinates onto {len(basis)} labels")
        return HRep(basis, self.inequalities, self.equalities, self.descriptors)
