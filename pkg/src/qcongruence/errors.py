"""Exception hierarchy shared by every module."""


class QCongruenceError(ArithmeticError):
    """Base class for all arithmetic failures raised by this package."""


class ZeroInput(QCongruenceError):
    pass


class NotPIntegral(QCongruenceError):
    pass


class NotInvertible(QCongruenceError):
    pass


class DivisionByZeroPoly(QCongruenceError, ZeroDivisionError):
    pass


class NotCoprime(QCongruenceError):
    """A denominator shares a factor with the modulus.

    ``witness`` holds the offending monic gcd.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DuplicateIndex(QCongruenceError, ValueError):
    pass


class NonTerminating(QCongruenceError):
    pass


class DegenerateParameters(QCongruenceError):
    pass


class UnbalancedFactors(QCongruenceError):
    pass
