"""Shared exception types for the cdslab package."""
from __future__ import annotations

__all__ = [
    "CdsLabError",
    "ContractError",
    "InvalidMoveError",
    "SizeLimitError",
    "InternalInvariantError",
]


class CdsLabError(Exception):
    """Base class for all cdslab errors."""


class ContractError(CdsLabError, ValueError):
    """A precondition on arguments was violated."""


class InvalidMoveError(CdsLabError, ValueError):
    """A requested swap move is not applicable in the given state."""


class SizeLimitError(CdsLabError, ValueError):
    """Input exceeds the size limit of a brute-force or enumeration routine."""


class InternalInvariantError(CdsLabError, RuntimeError):
    """An invariant the library relies on failed; indicates a bug."""
