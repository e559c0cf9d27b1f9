"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An input exceeds a documented size cap.

    Raised instead of ever returning an approximate or unverified answer.
    """


class FormatError(ValueError):
    """A file or string does not conform to the expected text format."""


class ModelValidationError(ValueError):
    """An operation received a minor model that violates its contract."""
