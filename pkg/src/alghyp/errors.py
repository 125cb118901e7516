"""Exception types shared across the package."""

from __future__ import annotations


class InvalidInputError(ValueError):
    """Inputs violate a documented precondition."""


class ModeError(InvalidInputError):
    """Operation only defined on the full product of projective spaces."""


class ContractViolation(RuntimeError):
    """An operation was called without its required check having passed."""


class InconsistentInputError(InvalidInputError):
    """Hyperbolicity and non-hyperbolicity criteria fired on the same input."""


class NotApplicable(InvalidInputError):
    """A corollary's hypotheses do not hold for the given input."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class LimitError(RuntimeError):
    """A requested computation exceeds a configured resource limit."""


class ParseError(InvalidInputError):
    """Configuration text could not be parsed; carries location info."""

    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.key = key
