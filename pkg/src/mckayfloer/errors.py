"""Exception hierarchy.

The CLI maps the four families below onto its exit codes, so every error
raised by the package derives from exactly one of them.
"""


class McKayError(Exception):
    """Base class for all package errors."""


class ValidationError(McKayError):
    """The input group violates a standing hypothesis (exit code 1)."""


class InputError(McKayError):
    """Malformed input text or unknown names (exit code 2)."""


class InternalAssertion(McKayError):
    """An internal consistency check failed (exit code 3)."""


class ResourceCap(McKayError):
    """A configured size limit was exceeded (exit code 4)."""


# cyclotomic
class PromotionOverflow(ResourceCap):
    pass


class DivisionByZero(McKayError, ZeroDivisionError):
    pass


# groups
class CapExceeded(ResourceCap):
    pass


class NotInvertible(ValidationError):
    pass


# spectrum
class NonIntegerAge(InternalAssertion):
    pass


class NotAnEigenvalue(McKayError, ValueError):
    pass


# czindex
class ParityViolation(McKayError, ValueError):
    pass


class WeightSumMismatch(McKayError, ValueError):
    pass


# floer
class NotIsolated(ValidationError):
    pass


class CoverageGap(InternalAssertion):
    pass


class CoverageOverlap(InternalAssertion):
    pass


# filtration
class QuadratureFailure(InternalAssertion):
    pass


# mckay
class NotSL(ValidationError):
    pass


# io
class ParseError(InputError):
    def __init__(self, position, expected, text="", where=""):
        self.position = position
        self.expected = tuple(expected)
        self.text = text
        self.where = where
        exp = ", ".join(repr(e) for e in self.expected)
        loc = f"{where}: " if where else ""
        super().__init__(f"{loc}parse error at position {position}: expected one of {exp}")


class UnknownBuiltin(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnsupportedFormat(McKayError, ValueError):
    pass
