"""Exception hierarchy shared by every module."""


class SyncOrderError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class ArityError(SyncOrderError, ValueError):
    pass


class ArityExceeded(ArityError):
    pass


class AutomatonFormatError(SyncOrderError, ValueError):
    pass


class OverlappingSupports(SyncOrderError):
    pass


class ComplementNotInfinite(SyncOrderError):
    pass


class ComplementNotFinite(SyncOrderError):
    pass


class NotAnOrder(SyncOrderError):
    pass


class NotLinear(SyncOrderError):
    pass


class InconsistentOrder(SyncOrderError):
    pass


class InfiniteAntichain(SyncOrderError):
    pass


class FormulaParseError(SyncOrderError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
