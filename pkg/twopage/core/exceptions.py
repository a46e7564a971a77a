"""Exception hierarchy shared by every twopage module."""


class TwoPageError(Exception):
    """Base class for all errors raised by twopage."""


class DrawingFormatError(TwoPageError):
    """A .2pg document could not be turned into a drawing."""


class MalformedHeaderError(DrawingFormatError):
    """First line is not ``2pg 1 <n>`` with n >= 3."""


class RowLengthError(DrawingFormatError):
    """Wrong number of rows, or a row of the wrong length."""


class IllegalCharacterError(DrawingFormatError):
    """A row holds a character other than B or R."""


class ConventionViolationError(DrawingFormatError):
    """A spine entry (i, i+1) or the entry (1, n) is Red."""


class ParameterRangeError(TwoPageError, ValueError):
    """An integer parameter lies outside its supported range."""


class SizeMismatchError(TwoPageError, ValueError):
    """Two drawings were expected to have the same number of vertices."""


class TemplateConflictError(TwoPageError):
    """Two template rules assign different colors to one entry, or an entry is uncovered."""


class IdentityMismatchError(TwoPageError):
    """Two computations that must agree returned different values."""


class SearchLimitError(TwoPageError):
    """A search was aborted because its input exceeds a configured cap."""
