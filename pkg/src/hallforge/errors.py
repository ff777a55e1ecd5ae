"""Exception types shared across the package."""


class HallforgeError(Exception):
    """Base class for all package errors."""


class ResourceLimitError(HallforgeError):
    """An exhaustive loop would exceed the configured enumeration limit."""


class OutOfCatalogError(HallforgeError):
    """A computation needs an isomorphism class outside the catalog bound."""


class ParseError(HallforgeError, ValueError):
    """Malformed textual input (quiver spec, iso-class literal, expression)."""

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class ValidationError(HallforgeError, ValueError):
    """Well-formed input that violates a domain constraint."""


class InternalError(HallforgeError, AssertionError):
    """An internal consistency check failed; indicates a bug."""
