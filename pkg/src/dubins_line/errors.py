"""Exception hierarchy. Everything derives from ``ValueError`` so callers that
only care about "bad input" can catch one thing."""


class DubinsLineError(ValueError):
    pass


class InvalidArgumentError(DubinsLineError):
    pass


class OutOfValidityError(DubinsLineError):
    """The start is closer than four turn radii to the target line."""

    def __init__(self, d: float, r: float):
        self.d = d
        self.limit = 4.0 * r
        super().__init__(
            f"distance to line d={d:.4f} is below the required 4r={self.limit:.4f} "
            "(d >= 4r is needed for CSC-only solutions)"
        )


class DegenerateInstanceError(DubinsLineError):
    pass


class InfeasibleTangentError(DubinsLineError):
    pass


class BoundaryHeadingError(DubinsLineError):
    pass


class DiscontinuityStraddleError(DubinsLineError):
    pass
