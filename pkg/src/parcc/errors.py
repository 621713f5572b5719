"""Exception types shared across the package."""

from __future__ import annotations


class ParccError(Exception):
    """Base class for all errors raised by this package."""


class SpecSyntaxError(ParccError):
    """Raised when rule text cannot be parsed.

    Carries the 1-based source position so callers can point at the
    offending token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class DocumentError(ParccError):
    """Raised when a JSON document fails structural validation.

    ``path`` is a JSON path such as ``objects[0].class`` locating the
    offending value.
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.message = message
        self.path = path


class MetadataError(ParccError):
    """Raised when demonstrations or rule text disagree on shared metadata.

    Examples: demonstrations with different spaces or class sets, or a rule
    referencing a class the demonstration does not declare.
    """


class EvaluationError(ParccError):
    """Raised when an evaluation precondition is violated."""


class NoRelevantObjectsError(ParccError):
    """Raised when a satisfaction fraction has an empty denominator."""


class SamplingError(ParccError):
    """Raised when rejection sampling exhausts its retry budget."""


class SynthesisError(ParccError):
    """Raised when a placement request cannot produce the demanded scenes."""
