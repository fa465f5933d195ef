"""Errors and warnings raised by pathpoly.

Every error is a ``ValueError`` so callers that only care about bad input can
catch the builtin. ``exit_code`` is the status the command line returns when
the error escapes a subcommand.
"""

__all__ = [
    "PathPolyError",
    "InputFormatError",
    "TreeFormatError",
    "MalformedEdgeListError",
    "MalformedNewickError",
    "DuplicateEdgeError",
    "SelfLoopError",
    "DisconnectedError",
    "HasCycleError",
    "TooFewNodesError",
    "DuplicateLabelError",
    "MalformedPolyhedronFileError",
    "UnknownNodeError",
    "EqualEndpointsError",
    "NotLeafEdgeError",
    "NotInternalEdgeError",
    "LabelCollisionError",
    "HasDegreeTwoInternalError",
    "NoInternalNodeError",
    "NotALeafError",
    "TooSmallError",
    "EmptyVRepError",
    "BasisMismatchError",
    "DimensionMismatchError",
    "NotValidInequalityError",
    "ZeroConstraintError",
    "BadParametersError",
    "OriginInAffineHullError",
    "InvalidSpecError",
    "ProjectionImageMismatchError",
    "CapExceededError",
    "UnboundedError",
    "CertificationMismatch",
    "NonMinimalRepresentationWarning",
]


class PathPolyError(ValueError):
    """Base class: a mathematical precondition of an operation is violated."""

    exit_code = 2


class InputFormatError(PathPolyError):
    """Input text is malformed; carries the 1-based line number when known."""

    exit_code = 1

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TreeFormatError(InputFormatError):
    """Input does not describe a tree."""


class MalformedEdgeListError(TreeFormatError):
    pass


class MalformedNewickError(TreeFormatError):
    pass


class DuplicateEdgeError(TreeFormatError):
    pass


class SelfLoopError(TreeFormatError):
    pass


class DisconnectedError(TreeFormatError):
    pass


class HasCycleError(TreeFormatError):
    pass


class TooFewNodesError(TreeFormatError):
    pass


class DuplicateLabelError(TreeFormatError):
    pass


class MalformedPolyhedronFileError(InputFormatError):
    """An EXT or INE file does not follow the exact-rational text layout."""


class UnknownNodeError(PathPolyError):
    pass


class EqualEndpointsError(PathPolyError):
    pass


class NotLeafEdgeError(PathPolyError):
    pass


class NotInternalEdgeError(PathPolyError):
    pass


class LabelCollisionError(PathPolyError):
    pass


class HasDegreeTwoInternalError(PathPolyError):
    pass


class NoInternalNodeError(PathPolyError):
    pass


class NotALeafError(PathPolyError):
    pass


class TooSmallError(PathPolyError):
    pass


class EmptyVRepError(PathPolyError):
    pass


class BasisMismatchError(PathPolyError):
    pass


class DimensionMismatchError(PathPolyError):
    pass


class NotValidInequalityError(PathPolyError):
    pass


class ZeroConstraintError(PathPolyError):
    pass


class BadParametersError(PathPolyError):
    pass


class OriginInAffineHullError(PathPolyError):
    pass


class InvalidSpecError(PathPolyError):
    pass


class ProjectionImageMismatchError(PathPolyError):
    pass


class CapExceededError(PathPolyError):
    pass


class UnboundedError(PathPolyError):
    """The H-representation does not describe a bounded polytope."""


class CertificationMismatch(PathPolyError):
    """A closed-form result disagrees with the oracle."""

    exit_code = 3


class NonMinimalRepresentationWarning(UserWarning):
    """Custom warning for H-representations that may hold redundant rows.

    Emitted when degree-2 nodes are suppressed: the extra equalities tie
    merged edge coordinates together and the pulled-back inequalities need not
    be irredundant.
    """
