"""Exception types raised by kfc."""

from __future__ import annotations


class KfcError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ParseError(KfcError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(KfcError):
    """Input complex violates the grading/filtration axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"invalid complex:\n{lines}")


class NotKnotLikeError(KfcError):
    pass


class ChainMapError(KfcError):
    """An element-level region map failed to commute with the differentials."""


class InconclusiveError(KfcError):
    pass


class CableOracleMismatch(KfcError):
    pass
