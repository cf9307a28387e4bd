"""
Binary quadratic forms and finite abelian groups of form classes.
"""

from math import gcd, prod
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

FormTuple = Tuple[int, int, int]


class QuadForm(BaseModel):
    """
    Integral binary quadratic form a x^2 + b xy + c y^2.

    Sign and primitivity are checked by the operations that need them
    (reduction raises WrongSign / NotPrimitive), not by the model.

    Example:
        >>> f = QuadForm(a=2, b=2, c=3)
        >>> f.discriminant
        -20
        >>> str(f)
        '(2,2,3)'
    """

    a: int = Field(..., description="x^2 coefficient", examples=[2])
    b: int = Field(..., description="xy coefficient", examples=[2])
    c: int = Field(..., description="y^2 coefficient", examples=[3])

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, t: FormTuple) -> "QuadForm":
        return cls(a=t[0], b=t[1], c=t[2])

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    @property
    def is_positive_definite(self) -> bool:
        return self.discriminant < 0 and self.a > 0

    def as_tuple(self) -> FormTuple:
        return (self.a, self.b, self.c)

    def inverse(self) -> "QuadForm":
        """The opposite form (a, -b, c), representing the inverse class."""
        return QuadForm(a=self.a, b=-self.b, c=self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


class AbGroup(BaseModel):
    """
    Finite abelian group of form classes in invariant-factor form.

    Attributes:
        discriminant: Common discriminant of every class
        generators: One class per invariant factor
        divisors: d_1 | d_2 | ... | d_k, each >= 2 (empty for the trivial group)
        order: Group order, equal to the product of the divisors
        dlog: Class tuple -> exponent vector over the generators (order <= 10^6)

    Example:
        >>> g = AbGroup(discriminant=-84, generators=(...), divisors=(2, 2), order=4)
        >>> g.structure
        '[2, 2]'
    """

    discriminant: int = Field(..., description="Discriminant of the classes", examples=[-84])
    generators: Tuple[QuadForm, ...] = Field(
        default=(),
        description="Reduced representatives generating each cyclic factor"
    )
    divisors: Tuple[int, ...] = Field(
        default=(),
        description="Invariant factors in divisibility order",
        examples=[(2, 2)]
    )
    order: int = Field(..., ge=1, description="Group order", examples=[4])
    dlog: Optional[Dict[FormTuple, Tuple[int, ...]]] = Field(
        default=None,
        description="Discrete-log table keyed by canonical class tuple",
        exclude=True,
        repr=False
    )

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_invariant_factors(self) -> "AbGroup":
        if any(d < 2 for d in self.divisors):
            raise ValueError(f"invariant factors must be >= 2, got {self.divisors}")
        for lo, hi in zip(self.divisors, self.divisors[1:]):
            if hi % lo:
                raise ValueError(f"invariant factors must form a divisibility chain, got {self.divisors}")
        if prod(self.divisors) != self.order:
            raise ValueError(f"order {self.order} != product of invariant factors {self.divisors}")
        if len(self.generators) != len(self.divisors):
            raise ValueError("one generator per invariant factor is required")
        return self

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_cyclic(self) -> bool:
        return len(self.divisors) <= 1

    @property
    def exponent(self) -> int:
        return self.divisors[-1] if self.divisors else 1

    @property
    def structure(self) -> str:
        """Invariant factors as text, '1' for the trivial group."""
        return str(list(self.divisors)) if self.divisors else "1"

    def two_torsion_count(self) -> int:
        """Number of elements of order dividing 2."""
        return 2 ** sum(1 for d in self.divisors if d % 2 == 0)

    def log(self, f: QuadForm) -> Tuple[int, ...]:
        """
        Exponent vector of a canonical class representative.

        Raises:
            KeyError: If no table was built or f is not a canonical representative
        """
        if self.dlog is None:
            raise KeyError("no discrete-log table for this group")
        return self.dlog[f.as_tuple()]
