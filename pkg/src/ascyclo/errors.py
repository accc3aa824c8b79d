"""Exception hierarchy shared by every module of the package."""


class AscycloError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeP(AscycloError, ValueError):
    pass


class ReducibleModulus(AscycloError, ValueError):
    pass


class FieldTooLarge(AscycloError, ValueError):
    pass


class FieldMismatch(AscycloError, ValueError):
    """Operands live over different coefficient fields."""


class DivisionByZeroPoly(AscycloError, ZeroDivisionError):
    pass


class ZeroPolynomial(AscycloError, ValueError):
    pass


class NotIrreducible(AscycloError, ValueError):
    pass


class InvalidAlpha(AscycloError, ValueError):
    """An exponent that must be prime to p is divisible by p (or is < 1)."""


class DegenerateInput(AscycloError, ValueError):
    """A right-hand side lies in the image of b -> b^p - b."""


class InWpError(DegenerateInput):
    pass


class RhoInWp(AscycloError, ValueError):
    pass


class NotSingleTerm(AscycloError, ValueError):
    pass


class BudgetExceeded(AscycloError, RuntimeError):
    pass


class ModulusMismatch(AscycloError, ValueError):
    pass


class NotAUnit(AscycloError, ValueError):
    pass


class ParseError(AscycloError, ValueError):
    pass


class GridParseError(ParseError):
    pass
