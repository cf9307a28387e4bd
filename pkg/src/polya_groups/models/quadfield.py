"""
Quadratic field models: validated fundamental discriminants and the
ambiguous form attached to each ramified prime.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polya_groups.models.forms import QuadForm
from polya_groups.validators import validate_fundamental_discriminant


class FundamentalDiscriminant(BaseModel):
    """
    Discriminant of a quadratic field Q(sqrt(d)) with its ramified primes.

    Attributes:
        d: Fundamental discriminant (d != 0, 1)
        ramified: Primes dividing d, ascending

    Example:
        >>> F = FundamentalDiscriminant(d=-20, ramified=(2, 5))
        >>> F.s, F.radicand
        (2, -5)
    """

    d: int = Field(..., description="Fundamental discriminant", examples=[-20])
    ramified: Tuple[int, ...] = Field(
        ...,
        min_length=1,
        description="Prime divisors of d in ascending order",
        examples=[(2, 5)]
    )

    model_config = ConfigDict(frozen=True)

    _validate_d = field_validator('d')(validate_fundamental_discriminant)

    @model_validator(mode='after')
    def check_ramified(self) -> "FundamentalDiscriminant":
        if list(self.ramified) != sorted(set(self.ramified)):
            raise ValueError(f"ramified primes must be distinct and ascending, got {self.ramified}")
        for p in self.ramified:
            if self.d % p:
                raise ValueError(f"{p} does not divide {self.d}")
        rest = abs(self.d)
        for p in self.ramified:
            while rest % p == 0:
                rest //= p
        if rest != 1:
            raise ValueError(f"ramified primes {self.ramified} miss a prime factor of {self.d}")
        return self

    @property
    def s(self) -> int:
        """Number of ramified primes."""
        return len(self.ramified)

    @property
    def radicand(self) -> int:
        """Square-free n with Q(sqrt(n)) the field."""
        return self.d if self.d % 4 == 1 else self.d // 4

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    @property
    def roots_of_unity(self) -> int:
        """w: 6 for d = -3, 4 for d = -4, else 2."""
        return {-3: 6, -4: 4}.get(self.d, 2)

    def ramification_index(self, p: int) -> int:
        """2 for a ramified prime, else 1."""
        return 2 if p in self.ramified else 1

    def __str__(self) -> str:
        return f"Q(sqrt({self.radicand})) [d={self.d}]"


class AmbiguousPrimeData(BaseModel):
    """
    Canonical ambiguous form of a ramified prime p.

    The form has leading coefficient p, so it represents p.

    Example:
        >>> AmbiguousPrimeData(p=2, form=QuadForm(a=2, b=2, c=3))
    """

    p: int = Field(..., description="Ramified prime", examples=[2])
    form: QuadForm = Field(..., description="Form (p, b, c) of the field discriminant")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_leading_coefficient(self) -> "AmbiguousPrimeData":
        if self.form.a != self.p:
            raise ValueError(f"ambiguous form {self.form} must have leading coefficient {self.p}")
        return self
