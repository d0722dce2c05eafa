class ThreeQubitError(ValueError):
    """Base class for errors raised by this package."""


class DegenerateInput(ThreeQubitError):
    pass


class NotNormalized(ThreeQubitError):
    pass


class NotUnitary(ThreeQubitError):
    pass


class InvalidCanonicalForm(ThreeQubitError):
    pass


class NotDecomposable(ThreeQubitError):
    """The requested decomposition does not exist for this state."""

    def __init__(self, message: str, type_label: str | None = None, reason: str | None = None):
        super().__init__(message)
        self.type_label = type_label
        self.reason = reason
