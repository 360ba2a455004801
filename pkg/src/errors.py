# src/errors.py

"""
Exception types shared by every module.

Each exception carries the CLI exit code it maps to, so main.py can turn a
failure into the documented exit status without a lookup table.
"""


class RamseyError(Exception):
    """Base class for all errors raised by the verification engine."""
    exit_code = 2


class ShapeError(RamseyError):
    """Invalid partite shape, vertex reference or cross-shape operation."""


class HostCapExceeded(ShapeError):
    """Host is larger than the configured vertex/edge caps."""


class DomainError(RamseyError):
    """(j, n) outside the evaluated domain, or a value with no finite bound."""


class Graph6Error(RamseyError):
    """Malformed graph6 text or an encoded edge that is not a host edge."""


class ConstructionError(RamseyError):
    """A lower-bound construction failed its own verification."""


class NoWitnessError(RamseyError):
    """The regime has value 1: the host is empty and nothing can be witnessed."""
    exit_code = 3


class BudgetExceededError(RamseyError):
    """A search ran out of node or time budget before reaching a verdict."""
    exit_code = 4


class ClauseCapExceeded(RamseyError):
    """CNF export would produce more clauses than the configured cap."""


class CertificateError(RamseyError):
    """Certificate or coloring file could not be parsed or failed validation."""


class BoundRefutedError(RamseyError):
    """Search found a good coloring on the host the formula says has none."""
    exit_code = 1

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
