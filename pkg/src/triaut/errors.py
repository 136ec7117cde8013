"""Exception types shared across the library.

Every domain error derives from TriautError so the CLI can map them to a
single exit code; ParseError carries a 1-based byte offset.
"""


class TriautError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TriautError):
    """Malformed textual input; offset is the 1-based byte position."""

    def __init__(self, offset, message):
        super().__init__(f"parse error at byte {offset}: {message}")
        self.offset = offset
        self.message = message


class ModeMismatch(TriautError):
    pass


class ArityMismatch(TriautError):
    pass


class IndexOutOfRange(TriautError):
    pass


class BudgetExceeded(TriautError):
    pass


class ZeroAlpha(TriautError):
    pass


class VariableDependence(TriautError):
    pass


class EqualIndices(TriautError):
    pass


class NotTriangular(TriautError):
    pass


class NotUnitriangular(TriautError):
    pass


class NotInvolution(TriautError):
    pass


class ZeroShift(TriautError):
    pass


class LayerViolation(TriautError):
    pass


class BadIndices(TriautError):
    pass


class NotInDerivedSubgroup(TriautError):
    pass


class SideConditionViolated(TriautError):
    pass


class DegreeTooSmall(TriautError):
    pass


class UnreducedWord(TriautError):
    pass


class UnsupportedIndices(TriautError):
    pass


class TrivialInput(TriautError):
    pass
