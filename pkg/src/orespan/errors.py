class GraphParseError(ValueError):
    """Malformed graph input. ``offset`` is the 0-based byte (graph6) or line (edge list) position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class CapExceeded(RuntimeError):
    """Instance is larger than the configured exact-search cap."""


class InvariantViolation(AssertionError):
    """A step that a proof guarantees to exist could not be carried out."""
