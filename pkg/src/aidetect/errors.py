"""Exception types shared across the package.

Everything raised on bad data or bad configuration derives from
:class:`DetectorError` so the CLI can map it to a single exit code.
"""


class DetectorError(Exception):
    """Base class for data / validation / configuration failures."""


class ConfigError(DetectorError):
    """Invalid configuration value (vocab size too small, bad ratios, ...)."""


class SchemaError(DetectorError):
    """Dataset file is missing a required column."""


class RowError(DetectorError):
    """A specific dataset row is invalid (bad label, empty text)."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


class CsvError(DetectorError):
    """Malformed CSV input; ``offset`` is the byte offset of the problem."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"byte offset {offset}: {message}")
        self.offset = offset


class TokenizerError(DetectorError):
    """Tokenizer misuse, e.g. a token id outside the vocabulary."""


class UndefinedInputError(DetectorError):
    """Operation applied to an input it is not defined on (e.g. zero words)."""


class NumericsError(DetectorError):
    """Non-finite values where finite ones are required; training aborts."""


class CheckpointError(DetectorError):
    """Checkpoint file is malformed or inconsistent."""
