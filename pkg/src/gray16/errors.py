"""Exception types raised by gray16.

Verification outcomes are never raised; they come back as report objects.
These exceptions signal malformed input only.
"""


class Gray16Error(ValueError):
    pass


class UnknownGroupError(Gray16Error, NameError):
    """Raised for a group or base-map name that is not in the catalog."""


class InvalidGroupTable(Gray16Error):
    pass


class NotHomomorphism(Gray16Error):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidExtension(Gray16Error):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DegreeMismatch(Gray16Error):
    pass


class NotNormal(Gray16Error):
    pass


class NotTransversal(Gray16Error):
    pass


class NotSplit(Gray16Error):
    pass


class LengthMismatch(Gray16Error):
    pass


class NotIndexTwo(Gray16Error):
    pass


class ElementInH(Gray16Error):
    pass


class InvalidBaseMap(Gray16Error):
    pass


class WeightsNotInvariant(Gray16Error):
    """Conjugation by the coset representative changes a base-map weight."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeMismatch(Gray16Error):
    pass
