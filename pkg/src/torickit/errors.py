"""Exception taxonomy shared across the package."""

from .exactalg.ratchar import DenominatorCollapseError

__all__ = [
    "ConvergenceError",
    "DenominatorCollapseError",
    "InputError",
    "NonCrepantError",
    "NotAdjacentError",
    "OnWallError",
    "OneSidedWallError",
    "WindowLiftError",
]


class InputError(ValueError):
    """Malformed user input (bad JSON, unknown fields, shape mismatches)."""


class OnWallError(ValueError):
    """The stability condition lies on a wall."""


class NotAdjacentError(ValueError):
    """The two stability conditions are not separated by exactly one wall."""


class OneSidedWallError(ValueError):
    """A wall with all character pairings of one sign; no flop across it."""


class ConvergenceError(ValueError):
    """The convexity certificate for an Euler characteristic failed."""


class NonCrepantError(ValueError):
    """A window operation was asked for on a non-crepant crossing."""


class WindowLiftError(RuntimeError):
    """The grade-restriction lift did not terminate or lost its relation."""
