"""
Named error conditions.

Input rejections derive from InputError (a ValueError) so callers can catch
them as a family; the CLI maps them to exit code 2. InvariantViolation maps
to exit code 3.
"""


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class NotFundamental(InputError):
    """Integer is not a fundamental discriminant (or is 0 or 1)."""


class NotSquarefree(InputError):
    """Integer is divisible by the square of a prime."""


class NotRamified(InputError):
    """Prime does not divide the discriminant."""


class NotPrimitive(InputError):
    """Form coefficients share a common factor."""


class WrongSign(InputError):
    """Form is not of the required sign (positive definite expected)."""


class DiscriminantMismatch(InputError):
    """Forms of different discriminants were combined."""


class OutOfRange(InputError):
    """Argument lies outside the supported range of the operation."""


class PerfectSquare(InputError):
    """Argument is a perfect square where a non-square is required."""


class NotAUnit(InputError):
    """Residue is not invertible modulo the modulus."""


class PrimeNotInConductor(InputError):
    """Prime does not divide the conductor of the field."""


class NotCoprime(InputError):
    """Cofactors are not coprime, so no Bezout combination exists."""


class DiscriminantOne(InputError):
    """Field has discriminant 1 (the rational field)."""


class NonIntegralDiscriminant(ArithmeticError):
    """The conductor-exponent formula produced a non-integral exponent."""


class PrecisionLoss(ArithmeticError):
    """High-precision evaluation could not be rounded to an integer safely."""


class InvariantViolation(RuntimeError):
    """Two independent computations disagreed."""
