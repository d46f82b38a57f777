"""Exception types shared across the package."""


class TuranStabError(Exception):
    """Base class for all package errors."""


class InputError(TuranStabError, ValueError):
    """Malformed or out-of-range input (bad vertex, bad partition, parse error)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapabilityError(TuranStabError):
    """An exhaustive search was asked to run beyond its configured guard."""


class PreconditionViolation(TuranStabError):
    """The graph contains K_{p+1}; ``witness`` holds the clique found."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = tuple(sorted(witness))
