"""Exception types shared across the package."""


class SingCurveError(ValueError):
    """Base class for every error raised by singcurve."""


class BoundExceeded(SingCurveError):
    """An enumeration or work estimate is above its configured limit."""

    def __init__(self, what: str, estimate: int, bound: int):
        self.what = what
        self.estimate = estimate
        self.bound = bound
        super().__init__(f"{what}: work estimate {estimate} exceeds bound {bound}")


class ValidationError(SingCurveError):
    """Input is well-formed but mathematically inadmissible."""


class BudgetExceeded(ValidationError):
    """A singularity prescription needs more closed points than the base has."""

    def __init__(self, degree: int, requested: int, available: int):
        self.degree = degree
        self.requested = requested
        self.available = available
        super().__init__(
            f"degree {degree}: {requested} closed points requested, "
            f"only {available} available"
        )


class SpecParseError(SingCurveError):
    """A glue-spec document could not be parsed."""
