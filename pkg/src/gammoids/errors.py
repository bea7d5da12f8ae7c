"""Exception types shared across the package."""


class GammoidsError(Exception):
    """Base class for all package-specific errors."""


class FormatError(GammoidsError, ValueError):
    """A text file or encoding string does not parse."""


class UnknownLabelError(GammoidsError, KeyError):
    """An element label is not in the ground set."""

    def __str__(self):
        return ", ".join(str(a) for a in self.args)


class SizeBoundExceeded(GammoidsError, RuntimeError):
    """An instance exceeds the configured search or enumeration budget."""
