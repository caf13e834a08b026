"""Exception hierarchy shared across the package."""


class IdbeError(Exception):
    """Base class for all errors raised by this package."""


class DictionaryOverflowError(IdbeError):
    """Requested rank is beyond the four-band codeword capacity."""


class DictionaryFormatError(IdbeError):
    """Dictionary file is malformed (bad header, duplicates, illegal bytes)."""


class MissingDictionaryError(IdbeError):
    """A transform that needs a dictionary was invoked without one."""


class CorruptStreamError(IdbeError):
    """An encoded stream violates its own framing rules.

    ``offset`` is the byte position where decoding failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class CorruptContainerError(IdbeError):
    """Container file is damaged; ``block`` names the failing block."""

    def __init__(self, message: str, block: int | None = None):
        if block is not None:
            message = f"block {block}: {message}"
        super().__init__(message)
        self.block = block


class SecureTransferError(IdbeError):
    """Base class for dictionary-transfer failures."""

    def __init__(self, message: str, sequence: int | None = None):
        if sequence is not None:
            message = f"frame {sequence}: {message}"
        super().__init__(message)
        self.sequence = sequence


class AuthenticationFailure(SecureTransferError):
    """Frame failed authentication; nothing about it can be trusted."""


class SequenceGapError(SecureTransferError):
    """Authenticated frames arrived out of order or with gaps."""


class FrameFormatError(SecureTransferError):
    """Frame fields are structurally invalid (version, type, size)."""


class NotFittedError(IdbeError):
    """Estimator used before ``fit``."""
