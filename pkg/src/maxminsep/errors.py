"""Error types shared across the library."""


class MaxMinError(Exception):
    """Base class for all library errors."""


class DimensionError(MaxMinError):
    """Operands live in unit cubes of different dimensions."""


class IntersectionError(MaxMinError):
    """A separation routine was handed objects that share a point."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundaryError(MaxMinError):
    """An input touches the cube boundary where strict interior is required."""


class ExhaustionError(MaxMinError):
    """Every candidate in a finite pipeline failed validation."""


class InternalError(MaxMinError):
    """A guaranteed invariant of a pipeline did not hold; indicates a bug."""


class ResourceLimitError(MaxMinError):
    """A brute-force enumeration would exceed its configured size bound."""


class ParseError(MaxMinError):
    """Malformed textual input (scalars, points, instances, certificates)."""
