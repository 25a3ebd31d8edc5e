class DomainError(ValueError):
    """Input is well formed but outside the operation's domain (e.g. a link for jones)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or work ceiling was exceeded."""

    def __init__(self, message: str, visited: int | None = None, partial=None):
        super().__init__(message)
        self.visited = visited
        self.partial = partial
