"""Exception hierarchy shared by all modules."""


class LegendrePairsError(Exception):
    pass


class InvalidGroupError(LegendrePairsError, ValueError):
    pass


class GroupMismatchError(LegendrePairsError, ValueError):
    pass


class CoefficientOverflowError(LegendrePairsError, OverflowError):
    pass


class UnsupportedIsomorphismError(LegendrePairsError, ValueError):
    pass


class FieldError(LegendrePairsError, ValueError):
    pass


class NonPrimitiveError(FieldError):
    def __init__(self, alpha: int, order: int) -> None:
        super().__init__(f"element {alpha} is not primitive: multiplicative order {order}")
        self.alpha = alpha
        self.order = order


class AlphabetError(LegendrePairsError, ValueError):
    pass


class ParameterError(LegendrePairsError, ValueError):
    """Parameters outside the regime a construction or predicate is defined for."""


class ConstructionError(LegendrePairsError):
    """A construction produced output failing a mandated check.  Carries the report."""

    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


class HadamardVerificationError(LegendrePairsError):
    pass


class InfeasibleSearchError(LegendrePairsError, ValueError):
    pass


class ParseError(LegendrePairsError, ValueError):
    pass
