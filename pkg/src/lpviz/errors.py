"""Exception types shared across the package."""

from __future__ import annotations


class LpvizError(Exception):
    """Base class for every error this package raises deliberately."""


class DimensionMismatch(LpvizError):
    """Matrix and vector shapes of a linear program disagree."""


class PhaseOneRequired(LpvizError):
    """The all-slack basis is infeasible; a phase-one start is needed."""


class SingularPivot(LpvizError):
    """Attempted to pivot on a zero coefficient."""


class EmptyRegion(LpvizError):
    """The feasible region contains no points."""


class VertexNotFound(LpvizError):
    """A trace solution did not match any enumerated vertex.

    This indicates an internal inconsistency between the solver and the
    geometry (both are exact, so it should never fire on a matching LP).
    """


class NotFractional(LpvizError):
    """Tried to branch on a value that is already an integer."""


class NodeLimitExceeded(LpvizError):
    """Branch and bound hit its node limit.

    The partially explored tree is attached as ``trace``.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class UnboundedRelaxation(LpvizError):
    """The root LP relaxation is unbounded, so branching cannot start."""


class UnknownExample(LpvizError):
    """No built-in example with the requested name."""


class DimensionUnsupported(LpvizError):
    """Scene building only supports 2 or 3 decision variables."""


class SchemaError(LpvizError):
    """A scene document failed validation.

    ``path`` is a JSON-path-style location of the offending field,
    e.g. ``$.polytope.vertices[3].coords``.
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class BundleMissing(LpvizError):
    """No UI bundle was supplied and no vendored bundle could be found."""
