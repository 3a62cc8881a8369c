"""Exception types shared across the package."""


class FactorkfError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(FactorkfError):
    """A dimension or shape precondition was violated."""


class NumericError(FactorkfError):
    """A computation produced non-finite values or an unsolvable system."""


class TrainingDiverged(NumericError):
    """Training hit a non-finite loss; the last good parameters are attached."""

    def __init__(self, message, last_good_params=None, epoch=None):
        super().__init__(message)
        self.last_good_params = last_good_params
        self.epoch = epoch
