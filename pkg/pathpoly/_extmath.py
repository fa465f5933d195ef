"""Exact rational linear algebra.

Everything here works on Python ``Fraction`` values; sympy does the
elimination so no floating point ever reaches a rank or a kernel.
"""
import math
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy


def as_fraction(value):
    """Convert an exact scalar to ``Fraction``.

    Floats are refused: a path polytope coordinate such as ``2/3`` has no
    exact binary representation and silently rounding it would break every
    equality test downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (float, np.floating)):
        raise TypeError(f"floating point value {value!r} is not exact; pass an int, Fraction or 'p/q' string")
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def rational_array(rows, ncols=None):
    """Return a 2-d object array of ``Fraction`` from nested sequences."""
    rows = [[as_fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    out = np.empty((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
        out[i, :] = row
    return out


def _to_sympy(rows, ncols):
    rows = [list(r) for r in rows]
    if not rows:
        return sympy.zeros(0, ncols)
    return sympy.Matrix([[sympy.Rational(f.numerator, f.denominator) for f in map(as_fraction, row)]
                         for row in rows])


def rank(rows, ncols=None):
    rows = [list(r) for r in rows]
    if not rows or (ncols is not None and ncols == 0):
        return 0
    return int(_to_sympy(rows, ncols or len(rows[0])).rank())


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns
    -------
    reduced : list of list of Fraction
        The nonzero rows, pivots normalized to one.
    pivots : tuple of int
        Pivot column of each returned row.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], ()
    matrix, pivots = _to_sympy(rows, ncols).rref()
    reduced = [[as_fraction(matrix[i, j]) for j in range(ncols)] for i in range(len(pivots))]
    return reduced, tuple(pivots)


def dot(a, b):
    return sum((as_fraction(x) * as_fraction(y) for x, y in zip(a, b)), Fraction(0))


def integerize(values):
    """Scale rationals to the primitive integer vector with the same direction.

    Multiplies by the lcm of the denominators, then divides by the gcd of the
    numerators. The zero vector is returned unchanged.
    """
    values = [as_fraction(v) for v in values]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in values), 1)
    ints = [int(v * lcm) for v in values]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        return ints
    return [x // g for x in ints]


def format_rational(value):
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
