"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A model or operation parameter is outside its legal range."""


class DomainError(ValueError):
    """An operation was applied to an input outside its domain (e.g. empty)."""


class SizeError(ValueError):
    """An input exceeds (or falls short of) a size bound of the algorithm."""


class ModelSpecError(ParameterError):
    """A textual model specification could not be parsed."""
