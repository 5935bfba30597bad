"""Exception hierarchy shared by all engine modules."""


class QrankError(Exception):
    """Base class for every error raised by this package."""


class NonPositive(QrankError):
    pass


class EvenRootOfNegative(QrankError):
    pass


class DivisionByZero(QrankError):
    pass


class BothZero(QrankError):
    pass


class NotMonic(QrankError):
    pass


class ZeroPolynomial(QrankError):
    pass


class ZeroElement(QrankError):
    pass


class NotIrreducible(QrankError):
    pass


class RootOfUnity(QrankError):
    pass


class ZeroConstantTerm(QrankError):
    pass


class ValidationFailed(QrankError):
    pass


class BudgetExceeded(QrankError):
    pass


class RatioOne(QrankError):
    pass


class FrobeniusInCharZero(QrankError):
    pass


class ZeroIndex(QrankError):
    pass


class ParseError(QrankError):
    pass
