"""
Exception hierarchy for tvgnet.
"""
from typing import Optional


class TVGNetError(Exception):
    """Base class for all tvgnet errors."""


class ConfigError(TVGNetError, ValueError):
    """Invalid run configuration."""


# Temporal graph algebra

class TemporalGraphError(TVGNetError, ValueError):
    """A time-varying graph operation received invalid arguments."""


class InvalidInstantError(TemporalGraphError):
    """A time instant is negative or not an integer."""


class InvalidIntervalError(TemporalGraphError):
    """An interval violates start < end."""


class OutOfLifetimeError(TemporalGraphError):
    """An instant or interval falls outside the graph lifetime."""


class SelfLoopError(TemporalGraphError):
    """An edge was requested between a node and itself."""


class UnknownNodeError(TemporalGraphError):
    """A node id is not recorded in the graph."""


class MissingEdgeError(TemporalGraphError):
    """An edge is not recorded in the graph."""


class InvalidWeightError(TemporalGraphError):
    """A weight event has a non-positive delta."""


class FrozenGraphError(TemporalGraphError):
    """A frozen graph was mutated."""


class InvalidStepError(TemporalGraphError):
    """A snapshot step is not a positive number of days."""


# Input files

class InputError(TVGNetError):
    """A corpus or network file could not be read."""

    def __init__(self, message: str, line_number: Optional[int] = None,
                 source: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.line_number = line_number
        self.source = source

    def __str__(self) -> str:
        location = self.source or "<stream>"
        if self.line_number is not None:
            location = f"{location}:{self.line_number}"
        return f"{location}: {self.message}"


class CorpusParseError(InputError):
    """A corpus record is malformed."""


class SerializationError(InputError):
    """A serialized network is corrupt or has an unsupported version."""


# Snapshot selection

class EmptyWindowError(TVGNetError, ValueError):
    """A window required to hold a graph is empty."""


class WindowIndexError(TVGNetError, IndexError):
    """A window index is outside the snapshot sequence."""


class InvariantViolation(TVGNetError, AssertionError):
    """An internal invariant does not hold."""
