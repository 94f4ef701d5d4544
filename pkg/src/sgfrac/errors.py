"""Exception types shared across the package."""


class SgfracError(Exception):
    """Base class for all package errors."""


class GraphError(SgfracError):
    """Invalid graph construction or vertex reference."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphError):
    """A vertex pair was listed twice or with both signs."""


class VertexOutOfRange(GraphError):
    """A vertex index falls outside 0..n-1."""


class OverlappingDistanceSets(GraphError):
    """Circulant distance sets S and T must be disjoint."""


class NTooSmall(GraphError):
    """Circulant graphs need at least three vertices."""


class ZeroK(GraphError):
    """Blow-up size must be at least one."""


class FormatError(SgfracError):
    """Malformed SG v1 text."""


class SizeLimitExceeded(SgfracError):
    """Instance exceeds the configured enumeration limit."""


class DimensionMismatch(SgfracError):
    """LP data with inconsistent dimensions."""


class BadParameters(SgfracError):
    """Invalid (p, q) parameters for a set coloring."""


class UnknownSet(SgfracError):
    """A support set is not signed independent in the host graph."""


class HostMismatch(SgfracError):
    """Objects defined over incompatible host graphs."""


class InfeasibleClique(SgfracError):
    """Vertex weighting is not a feasible fractional clique."""
