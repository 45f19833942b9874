# :coding: utf-8


class BorosMollError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(BorosMollError, ValueError):
    """Raised when a function is called outside of its valid range.

    Typical causes are an index *i* outside of the range accepted for a given
    *m*, rows which are not consecutive, or unknown check names.

    """


class DomainError(BorosMollError, ValueError):
    """Raised when a value cannot be represented as a real quadratic surd."""


class UnsupportedComparison(BorosMollError, TypeError):
    """Raised when comparing two surds with unrelated radicands."""

    def __init__(self, first, second):
        super(UnsupportedComparison, self).__init__(
            "Impossible to compare surds with radicands {} and {}.".format(
                first, second
            )
        )
        self.radicands = (first, second)


class CacheError(BorosMollError, RuntimeError):
    """Raised when a row-cache file is malformed."""

    def __init__(self, message, path=None, line=None):
        prefix = ""
        if path is not None:
            prefix += "{}:".format(path)
        if line is not None:
            prefix += "{}:".format(line)

        super(CacheError, self).__init__(
            "{} {}".format(prefix, message).strip()
        )
        self.path = path
        self.line = line
