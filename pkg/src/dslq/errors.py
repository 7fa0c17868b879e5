"""Exception hierarchy.

Every domain error derives from :class:`DslqError`; the CLI maps those to
exit code 1.
"""


class DslqError(Exception):
    pass


class InvalidParameterError(DslqError, ValueError):
    pass


class DistanceUndefinedError(DslqError, ValueError):
    """Raised when a distance is requested on a disconnected graph."""

    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"vertices {u} and {v} are not connected; distance undefined")


class InvalidMatrixError(DslqError, ValueError):
    pass


class InvalidPartitionError(DslqError, ValueError):
    pass


class UnsupportedOrderError(DslqError, ValueError):
    pass


class SizeLimitError(DslqError, ValueError):
    pass


class ParseError(DslqError, ValueError):
    pass
