"""Exception types shared across the package."""


class DataError(Exception):
    """Invalid or unusable input data: bad files, empty selections,
    incompatible geometry, malformed configuration values."""


class NumericError(Exception):
    """A numeric procedure could not produce a trustworthy result
    (degenerate samples, failed bracket, non-normalizable input)."""
