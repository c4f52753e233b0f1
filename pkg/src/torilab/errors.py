"""Exception types shared across the package."""


class VerificationError(AssertionError):
    """A computed identity failed to hold.

    ``details`` carries a JSON-friendly description of the failing case.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class StabilityError(VerificationError):
    pass
