"""Exception hierarchy shared by every module."""


class GwError(Exception):
    """Base class for all package errors."""


class DomainError(GwError, ValueError):
    """An argument lies outside the domain of a formula."""


class StructuralError(GwError, ValueError):
    """Two objects cannot be combined (e.g. different component bases)."""


class WindowError(GwError, KeyError):
    """A monomial lies outside the truncation window of a series."""

    def __str__(self):
        return str(self.args[0]) if self.args else "outside truncation window"


class CapacityError(GwError):
    """An exhaustive enumeration was requested beyond its supported size."""


class ValidationError(GwError, ValueError):
    """A surface descriptor violates one or more modeling hypotheses."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ParseError(GwError, ValueError):
    """A descriptor or serialized series could not be parsed."""
