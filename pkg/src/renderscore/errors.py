"""Exception types shared across the scoring engine and its service layer.

Every error carries a ``kind`` tag so the HTTP layer and batch slots can
report failures uniformly without inspecting exception classes.
"""

from __future__ import annotations


class RenderScoreError(Exception):
    """Base class for all engine errors."""

    kind = "internal"

    @property
    def message(self) -> str:
        return str(self)

    @property
    def path(self) -> str:
        return ""


class _PathedError(RenderScoreError):
    """Error anchored to a location inside a snapshot document."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self._path = path
        self._message = message

    @property
    def message(self) -> str:
        return self._message

    @property
    def path(self) -> str:
        return self._path


class SchemaError(_PathedError):
    """Snapshot document is missing a field or holds the wrong type."""

    kind = "schema"


class ValidationError(_PathedError):
    """Snapshot document is well-formed but violates a semantic invariant."""

    kind = "validation"


class EmptyReferenceError(RenderScoreError):
    """The reference page has no visible elements, so nothing can be scored."""

    kind = "empty_reference"


class DomainError(RenderScoreError):
    """A numeric argument is outside the domain a metric is defined on."""

    kind = "domain"


class WeightError(RenderScoreError):
    """Reward weights are invalid (negative, or all zero)."""

    kind = "weights"


class GroupSizeError(RenderScoreError):
    """Batch size is incompatible with the requested advantage group size."""

    kind = "group_size"


class BridgeError(RenderScoreError):
    """The external renderer bridge failed to produce a snapshot."""

    kind = "bridge"
