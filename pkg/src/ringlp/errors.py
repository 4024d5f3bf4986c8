"""Exception types shared across the library."""

from __future__ import annotations


class RingLpError(Exception):
    """Base class for all library errors."""


class RingMismatch(RingLpError):
    """Operands belong to different rings."""


class DimensionMismatch(RingLpError):
    """Vector or matrix dimensions are inconsistent."""


class ParseError(RingLpError):
    """Malformed element literal or program file."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self) -> str:
        base = super().__str__()
        if self.line is not None:
            return f"line {self.line}, col {self.col}: {base}"
        return base


class NotAPositiveNonUnit(RingLpError):
    """The construction needs a positive element without a multiplicative inverse."""


class NoSmallestPositive(RingLpError):
    """The ring has no smallest positive element."""


class PreconditionViolated(RingLpError):
    """A documented precondition failed; the message names the failing test."""


class StepLosesFeasibility(RingLpError):
    """A rescaled dual point stopped being feasible (or stopped improving)."""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class UnsupportedRing(RingLpError):
    """The operation is only defined for exhaustively enumerable rings."""
