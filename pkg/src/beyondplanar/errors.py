"""Exception types shared across the package."""


class BeyondPlanarError(Exception):
    """Base class for all package-specific errors."""


class MalformedEmbeddingError(BeyondPlanarError):
    """A rotation system is inconsistent (asymmetric, loops, duplicates)."""


class NonSimpleDualError(BeyondPlanarError):
    """The dual of an embedding has parallel edges.

    Carries enough data to inspect the offending dual: ``n`` is the number
    of dual vertices and ``edge_slots`` lists one (f, g) pair per primal
    edge, with repeats for parallel dual edges.
    """

    def __init__(self, n: int, edge_slots: list[tuple[int, int]]):
        self.n = n
        self.edge_slots = edge_slots
        super().__init__(
            f"dual is not simple: {n} vertices, {len(edge_slots)} edge slots"
        )


class MalformedDrawingError(BeyondPlanarError):
    """A planarization with crossing dummies violates a drawing invariant."""


class SimplicityError(BeyondPlanarError):
    """An operation would create a loop or duplicate edge."""


class NotAdmissibleError(BeyondPlanarError):
    """No optimal graph of the requested type exists for this size."""


class UnsupportedSizeError(BeyondPlanarError):
    """The size is admissible but outside the generator's supported set."""


class UsageError(BeyondPlanarError):
    """An operation was called with arguments outside its contract."""


class ConstructionError(BeyondPlanarError):
    """A construction step could not be completed after all retries."""


class ConvergenceError(BeyondPlanarError):
    """An iterative solver did not reach the requested residual."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (final residual {residual:.3e})")
