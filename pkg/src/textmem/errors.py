"""Shared exception hierarchy.

Every error raised by this package derives from TextmemError so callers
(notably the CLI) can catch one type and report cleanly.
"""


class TextmemError(Exception):
    """Base class for all textmem errors."""


class TimeOrderError(TextmemError):
    """Timestamps arrived out of order (clock ran backwards)."""


class EmptyPrimaryError(TextmemError):
    """A sketch with no primary keywords cannot be stored."""


class UnanswerableQuery(TextmemError):
    """No content keyword survived question parsing."""


class ConfigError(TextmemError):
    """Bad configuration file or invalid parameter combination."""
