"""Exception types shared across the package."""


class ConstDepthError(Exception):
    pass


class DimensionMismatch(ConstDepthError, ValueError):
    pass


class NotEquigenerated(ConstDepthError, ValueError):
    """Raised where a computation needs all minimal generators in one degree."""


class ResourceLimitExceeded(ConstDepthError):
    """A configured ceiling was hit. The computation gives no answer, never a wrong one."""

    def __init__(self, what, limit, observed=None):
        self.what = what
        self.limit = limit
        self.observed = observed
        msg = f"{what} exceeded limit {limit}"
        if observed is not None:
            msg += f" (reached {observed})"
        super().__init__(msg)


class InvariantViolation(ConstDepthError):
    """An internal consistency check failed; indicates a bug or a falsified theorem."""


class ParseError(ConstDepthError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
