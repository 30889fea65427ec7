"""Exception hierarchy shared across the package."""

from __future__ import annotations


class AgentEconError(Exception):
    """Base class for all package errors."""


class ParameterError(AgentEconError, ValueError):
    """A parameter value violates a model invariant.

    ``key`` names the offending parameter so callers (config loader, CLI)
    can report it.
    """

    def __init__(self, key: str, message: str) -> None:
        super().__init__(f"{key}: {message}")
        self.key = key


class DomainError(AgentEconError, ValueError):
    """A model was evaluated outside the region where its formulas apply."""


class InfeasibleAnchorError(DomainError):
    """Human output alone meets or exceeds the observed GDP of an anchor."""


class ConfigParseError(AgentEconError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"parse error{where}: {message}")
        self.line = line
        self.column = column


class ConfigValidationError(AgentEconError):
    def __init__(self, key: str, message: str) -> None:
        super().__init__(f"invalid value for '{key}': {message}")
        self.key = key


class OutputError(AgentEconError):
    """A result file could not be produced."""
