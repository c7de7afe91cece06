"""Exception hierarchy shared by every module in the package."""


class SkewZ4Error(Exception):
    """Base class for all errors raised by skewz4."""


class NotAUnit(SkewZ4Error, ArithmeticError):
    pass


class MixedDerivation(SkewZ4Error, ValueError):
    pass


class NonUnitLeadingCoefficient(SkewZ4Error, ArithmeticError):
    pass


class DivisionByZeroPolynomial(SkewZ4Error, ZeroDivisionError):
    pass


class DegreeTooLarge(SkewZ4Error, ValueError):
    pass


class NotARightDivisor(SkewZ4Error, ValueError):
    pass


class NotFreeCode(SkewZ4Error, ValueError):
    pass


class OddLength(SkewZ4Error, ValueError):
    pass


class SpanTooLarge(SkewZ4Error, RuntimeError):
    pass


class TooManyCodewords(SkewZ4Error, RuntimeError):
    pass


class ZeroCode(SkewZ4Error, ValueError):
    pass


class LengthMismatch(SkewZ4Error, ValueError):
    pass


class PolySyntaxError(SkewZ4Error, SyntaxError):
    """Malformed element or polynomial text.

    ``position`` is the 0-based offset into the original string where
    parsing failed.
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
