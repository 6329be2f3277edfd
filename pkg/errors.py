"""
Exception types raised by the counting modules. Only main.py turns them
into exit codes.
"""


class GridCountError(Exception):
    pass


class ShapeError(GridCountError, ValueError):
    """Grid dimensions outside m >= 1, n >= 1 (or wrong parity for a sum)."""


class InternalConsistencyError(GridCountError):
    """A count that must be an integer, or non-negative, is not."""


class DimensionError(GridCountError, ValueError):
    pass


class SeriesDomainError(GridCountError, ValueError):
    pass


class ExponentRangeError(GridCountError, IndexError):
    pass


class CapacityError(GridCountError):
    def __init__(self, cells, cap):
        super().__init__(
            f'{cells} cells exceeds the enumeration cap of {cap} '
            f'(raise it with --unsafe-cells)'
        )
        self.cells = cells
        self.cap = cap
