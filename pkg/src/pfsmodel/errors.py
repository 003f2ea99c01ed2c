"""Exception hierarchy shared by every module of the package."""


class PfsError(Exception):
    """Base class for all errors raised by pfsmodel."""


class RangeError(PfsError, IndexError):
    """A variable, vertex or literal index lies outside its declared range."""


class ArityError(PfsError, ValueError):
    """An assignment or bit block has the wrong length for the function it meets."""


class CapError(PfsError, ValueError):
    """An exhaustive operation was requested above the enumeration cap."""


class DomainError(PfsError, ValueError):
    pass


class LabelError(PfsError, KeyError):
    pass


class ParseError(PfsError, ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemaError(PfsError, ValueError):
    """An instance document violates the schema. ``path`` names the offending field."""

    def __init__(self, message, path=""):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
