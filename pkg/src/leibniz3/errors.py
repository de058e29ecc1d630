"""Exception hierarchy shared across the package."""


class Leibniz3Error(Exception):
    pass


class UsageError(Leibniz3Error, ValueError):
    """Bad arguments: shape, ambient dimension or field mismatch."""


class FieldMismatchError(UsageError):
    pass


class FormatError(Leibniz3Error, ValueError):
    """Malformed input file or flag value."""


class UnsupportedFieldError(Leibniz3Error):
    """The operation is not defined over this field (characteristic 2)."""


class InvalidAlgebraError(Leibniz3Error):
    """The structure constants violate the left Leibniz 3-identity."""


class NotAnIdealError(Leibniz3Error):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceededError(Leibniz3Error):
    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = candidates
