"""Exception types shared across the package."""


class CosmoEvoError(Exception):
    """Base class for all package errors."""


class ValidationError(CosmoEvoError):
    """An input violated a documented invariant."""


class EnumerationTooLargeError(CosmoEvoError):
    """The action space is too large to enumerate exhaustively."""


class EmptyBufferError(CosmoEvoError):
    """An operation required a non-empty replay buffer."""


class BufferTooSmallError(CosmoEvoError):
    """The evolutionary step requires more than one buffered item."""


class ConfigError(CosmoEvoError):
    """A run configuration file or value is invalid."""
