"""Domain error hierarchy shared by all modules and the CLI."""

from __future__ import annotations


class DomainError(Exception):
    """Base class for errors that map to exit status 1 in the CLI."""

    kind = "DomainError"


class LengthMismatch(DomainError):
    kind = "LengthMismatch"


class DegreeMismatch(DomainError):
    kind = "DegreeMismatch"


class CapExceeded(DomainError):
    kind = "CapExceeded"


class LengthTooLarge(DomainError):
    kind = "LengthTooLarge"


class NotDoublyEven(DomainError):
    kind = "NotDoublyEven"


class IndexOutOfRange(DomainError):
    kind = "IndexOutOfRange"


class SameColor(DomainError):
    kind = "SameColor"


class InvalidChromotopology(DomainError):
    kind = "InvalidChromotopology"


class NoDashing(DomainError):
    kind = "NoDashing"


class NoCocycle(DomainError):
    kind = "NoCocycle"


class ElementNotInLoop(DomainError):
    kind = "ElementNotInLoop"


class NotTransitive(DomainError):
    kind = "NotTransitive"


class NonIntegerGenus(DomainError):
    kind = "NonIntegerGenus"
