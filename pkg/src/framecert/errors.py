"""Exception types shared across the package."""


class ResourceGuardError(RuntimeError):
    """A computation would exceed the desk-scale enumeration limits."""


class ConsistencyError(RuntimeError):
    """An internal check failed; the message names the claim it contradicts."""


class MatrixParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DesignError(ValueError):
    """Blocks do not form the requested Steiner system."""
