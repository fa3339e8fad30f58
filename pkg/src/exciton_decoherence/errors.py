class DomainError(ValueError):
    """Argument outside the domain of a physical formula (negative time, ...)."""


class MaterialError(ValueError):
    """A material record violates one of its invariants."""

    def __init__(self, message, fields=()):
        super().__init__(message)
        self.fields = tuple(fields)


class MaterialFileError(ValueError):
    """Malformed material file. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None, key=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.key = key


class TruncationError(ValueError):
    def __init__(self, message, required_nmax):
        super().__init__(message)
        self.required_nmax = required_nmax


class ConfigurationError(ValueError):
    pass


class IntegrationError(RuntimeError):
    def __init__(self, message, t_reached=None):
        super().__init__(message)
        self.t_reached = t_reached
