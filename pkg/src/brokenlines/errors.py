"""Exception hierarchy shared across the package."""


class BrokenLinesError(Exception):
    """Base class for all package-specific errors."""


class NotAdjacent(BrokenLinesError):
    """A chart/ray pair that do not touch was passed to a transport routine."""


class HitsSingularity(BrokenLinesError):
    """A straight path runs through the origin, where the affine structure is singular."""


class NonGenericEndpoint(BrokenLinesError):
    """An endpoint sits on a wall, a ray, or a line through the singularity."""


class TangentToWall(BrokenLinesError):
    """A monomial tangent pairs to zero with a wall normal; the crossing is sign-ambiguous."""


class NonConvergent(BrokenLinesError):
    """Consistency completion would require a wall term of nonpositive degree."""


class InconsistentDiagram(BrokenLinesError):
    """Two chambers produced different expansions for the same structure constant."""


class InfiniteCokernel(BrokenLinesError):
    """A lattice map is not of full rank onto its target."""


class IdentityViolation(BrokenLinesError):
    """The splitting multiplicity identity failed on the supplied gluing data."""


class UnsupportedVertex(BrokenLinesError):
    """A vertex sits in a cell where the balancing condition is not available."""


class ChartObstruction(BrokenLinesError):
    """An edge cannot be expressed as a linear condition in a single chart sequence."""


class NotKTrace(BrokenLinesError):
    """Cutting was requested on a type that is not a k-trace type."""


class TruncationMismatch(BrokenLinesError):
    """Two truncated elements with different orders were combined."""


class DegenerateGram(BrokenLinesError):
    """The windowed trace pairing does not determine the product uniquely."""


class NoOracle(BrokenLinesError):
    """No independent quantum-period oracle is registered for the target."""


class PeriodMismatch(BrokenLinesError):
    """Classical and quantum period series disagree; carries the first failing degree."""

    def __init__(self, degree, classical, quantum):
        self.degree = degree
        self.classical = classical
        self.quantum = quantum
        super().__init__(
            f"period mismatch at degree {degree}: classical={classical} quantum={quantum}"
        )
