"""Exception types shared across the package."""


class ArithCorrError(Exception):
    """Base class for all errors raised by arithcorr."""


class PolynomialFormatError(ArithCorrError):
    """A polynomial string could not be parsed."""


class DegreeOutOfRange(ArithCorrError):
    """Field degree m outside the supported range."""


class DegreeMismatch(ArithCorrError):
    """Supplied modulus polynomial does not have degree m."""


class NotIrreducible(ArithCorrError):
    """Modulus polynomial factors over GF(2)."""


class NotPrimitive(ArithCorrError):
    """Modulus polynomial is irreducible but its root does not generate the multiplicative group."""


class ZeroInverse(ArithCorrError):
    """Multiplicative inverse of zero requested."""


class TauOutOfRange(ArithCorrError):
    """Shift amount tau outside the valid range."""


class PatternTooLong(ArithCorrError):
    """Pattern longer than the sequence period."""


class ShiftEqualsSequence(ArithCorrError):
    """sigma(seq) equals sigma of the shifted sequence; correlation undefined."""


class EqualSequences(ArithCorrError):
    """Block decomposition requires two distinct sequences."""


class PeriodMismatch(ArithCorrError):
    """Two-row operations require equal periods."""


class LOutOfRange(ArithCorrError):
    """Interior-run length l outside the valid range."""
