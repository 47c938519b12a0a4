"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or unexpected dimensions."""


class ArgumentError(ValueError):
    """An argument violates a documented precondition."""


class CapacityError(RuntimeError):
    """A computation exceeds a configured size cap; raise the cap to proceed."""


class ParseError(ValueError):
    """Malformed textual input.

    ``offset`` is the byte offset into a graph6 string, or the 1-based
    line number of an edge-list file.
    """

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset
