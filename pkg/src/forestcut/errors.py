"""Exception types shared across the package."""


class ForestCutError(Exception):
    """Base class for all library errors."""


class LoopEdgeError(ForestCutError):
    """An edge joins a vertex to itself."""


class OutOfRangeError(ForestCutError):
    """A vertex index is outside 0..order-1."""


class OrderTooLargeError(ForestCutError):
    """Graph order exceeds the 128-vertex cap."""


class MalformedGraph6Error(ForestCutError):
    """A graph6 line has a bad length or an out-of-range byte."""


class UnsupportedOrderError(ForestCutError):
    """graph6 short form only covers orders up to 62."""


class DisconnectedInputError(ForestCutError):
    """Cut predicates and finders require a connected graph."""


class CompleteGraphError(ForestCutError):
    """Complete graphs have no vertex separator."""


class SearchTooLargeError(ForestCutError):
    """Exhaustive subset search is capped at 28 vertices."""


class NotSphereEmbeddingError(ForestCutError):
    """Face tracing of a rotation system violated Euler's formula."""


class NotAFaceError(ForestCutError):
    """The given vertex triple does not bound a face of the embedding."""


class EdgeNotOnChosenFaceError(ForestCutError):
    """The chosen edge does not lie on the outer face."""


class KTooSmallError(ForestCutError):
    """Family parameter below the smallest admissible value."""


class BadParametersError(ForestCutError):
    """Construction parameters violate the documented constraints."""


class NotACliqueError(ForestCutError):
    """A gluing tuple does not induce a complete subgraph."""


class UnknownFixtureError(ForestCutError):
    """No named fixture with the requested name."""


class NTooSmallError(ForestCutError):
    """The linear programs are only defined for n >= 8."""


class MissingVariableError(ForestCutError):
    """A feasibility check received a point that skips a variable."""


class InfeasibleCertificateError(ForestCutError):
    """A claimed dual certificate failed the exact feasibility check."""


class SimplexFailureError(ForestCutError):
    """The exact solver hit an unbounded or infeasible instance."""


class OrderTooLargeForEnumerationError(ForestCutError):
    """Built-in isomorphism-free enumeration stops at 7 vertices."""


class UnsupportedCensusOrderError(ForestCutError):
    """The census reproduction is defined for n in {6, 7} only."""
