"""Exception types shared across the package."""


class PrizeTourError(Exception):
    """Base class for all errors raised by this package."""


class InvariantViolation(PrizeTourError):
    """A graph, instance, or file violates a structural invariant."""


class ParseError(PrizeTourError):
    """An input document could not be parsed."""


class UnsupportedEdgeWeightTypeError(ParseError):
    """The TSPLIB document does not use 2-D Euclidean coordinates."""


class MalformedSectionError(ParseError):
    """A TSPLIB section is missing or inconsistent with the header."""


class NotSimpleError(PrizeTourError):
    """A vertex sequence repeats a vertex or is too short to be a cycle."""


class MissingEdgeError(PrizeTourError):
    """Two consecutive tour vertices are not adjacent in the graph."""


class RootAbsentError(PrizeTourError):
    """A tour does not contain the root vertex."""


class RootIsolatedError(PrizeTourError):
    """The root vertex has no incident edges."""


class NoDisjointPairError(PrizeTourError):
    """No vertex admits a pair of vertex-disjoint paths from the root."""


class InvalidCandidateError(PrizeTourError):
    """An extension candidate does not increase the prize."""


class TrivialInfeasibleError(PrizeTourError):
    """The total prize of the graph is below the quota."""


class NumericalFailureError(PrizeTourError):
    """The LP core hit its iteration cap; the result cannot be trusted."""


class TooLargeError(PrizeTourError):
    """The instance exceeds the size limit of the exhaustive oracle."""


class CannotReachTargetError(PrizeTourError):
    """Edge removal cannot reach the requested edge count."""
