"""Exception types raised by this package."""


class TdabmError(Exception):
    """Base class for failures this package raises on bad input."""


class IngestError(TdabmError):
    """The input table cannot be loaded or does not validate."""


class MismatchError(TdabmError):
    """A graph document and a data table do not describe the same dataset."""
