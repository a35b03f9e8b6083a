"""Exception types raised by the library."""


class ZhangLiuError(Exception):
    """Base class for all library errors."""


class ParseError(ZhangLiuError, ValueError):
    """A field spec or element text could not be parsed."""


class NotPrime(ZhangLiuError, ValueError):
    """A claimed prime characteristic is composite (or < 2)."""


class Reducible(ZhangLiuError, ValueError):
    """A supplied extension modulus factors over the base field."""


class FieldTooLarge(ZhangLiuError, ValueError):
    """The requested field exceeds the desk-scale size ceiling."""


class MixedFields(ZhangLiuError, ValueError):
    """Operands belong to different fields."""


class DivisionByZero(ZhangLiuError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ZeroElement(ZhangLiuError, ValueError):
    """An operation defined on nonzero elements received zero."""


class ZeroParameter(ZhangLiuError, ValueError):
    """A matrix-family parameter that must be nonzero was zero."""


class SingularParameter(ZhangLiuError, ValueError):
    """x^2 = 1: the similarity parameter yx/(x^2-1) does not exist."""


class NotTriangular(ZhangLiuError, ValueError):
    """An upper-triangular matrix was required."""


class DimensionMismatch(ZhangLiuError, ValueError):
    """Matrix operands have different dimensions."""
