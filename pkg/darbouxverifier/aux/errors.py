class VerificationError(Exception):
    pass


class DomainError(VerificationError):
    pass


class ArgumentError(VerificationError):
    pass


class GalleryError(ArgumentError):
    pass


class BaseMismatch(VerificationError):
    pass


class MonotonicityError(VerificationError):
    pass


class PositivityError(VerificationError):
    pass


class RootNotBracketed(VerificationError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class WidthExceeded(VerificationError):
    """Raised when a budget runs out before an enclosure is narrow enough.

    `best` holds the narrowest bracket reached so far.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class BudgetExceeded(VerificationError):
    """Raised when a partition cannot meet its oscillation target within budget.

    `best` is the smallest oscillation sum reached, `cell` the offending cell
    (if the failure is local to one cell).
    """

    def __init__(self, message, best=None, cell=None):
        super().__init__(message)
        self.best = best
        self.cell = cell
