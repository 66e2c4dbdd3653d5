"""Exception hierarchy. ``exit_code`` is what the CLI returns for each."""
from __future__ import annotations


class ZDGError(Exception):
    exit_code = 1


class DomainError(ZDGError, ValueError):
    """Argument outside the operation's domain (e.g. n < 2)."""

    exit_code = 1


class EmptyGraphError(ZDGError):
    """Z_n has no nonzero zero divisors (n prime)."""

    exit_code = 2


class TooLargeError(ZDGError):
    exit_code = 3


class UnsupportedConventionError(ZDGError):
    exit_code = 1


class NoCircuitError(ZDGError):
    exit_code = 4

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NoTrailError(NoCircuitError):
    pass


class InconsistencyError(ZDGError):
    """Two independent computations disagreed; always a bug."""

    exit_code = 5
