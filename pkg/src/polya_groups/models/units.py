"""
Unit models: continued fractions, fundamental units and family checks.
"""

from enum import Enum
from typing import Optional, Tuple

from mpmath import mpf
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polya_groups.validators import validate_family


class ContinuedFraction(BaseModel):
    """
    Periodic continued fraction [a0; period] of sqrt(n).

    Example:
        >>> cf = ContinuedFraction(n=3, a0=1, period=(1, 2))
        >>> cf.period_length
        2
    """

    n: int = Field(..., ge=2, description="Non-square radicand", examples=[10])
    a0: int = Field(..., ge=1, description="Integer part isqrt(n)", examples=[3])
    period: Tuple[int, ...] = Field(..., min_length=1, description="Purely periodic tail", examples=[(6,)])

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_period(self) -> "ContinuedFraction":
        if self.period[-1] != 2 * self.a0:
            raise ValueError(f"period of sqrt({self.n}) must end in 2*a0 = {2 * self.a0}, got {self.period}")
        return self

    @property
    def period_length(self) -> int:
        return len(self.period)

    def __str__(self) -> str:
        return f"[{self.a0}; ({', '.join(map(str, self.period))})]"


class UnitData(BaseModel):
    """
    Fundamental unit (x + y sqrt(n)) / sigma of a real quadratic field.

    Attributes:
        d: Field discriminant
        n: Radicand
        x, y: Integer coordinates, both positive
        sigma: 1 or 2
        norm: +1 or -1
        regulator: log of the unit, arbitrary precision
    """

    d: int = Field(..., gt=1, examples=[40])
    n: int = Field(..., ge=2, examples=[10])
    x: int = Field(..., ge=1, examples=[3])
    y: int = Field(..., ge=1, examples=[1])
    sigma: int = Field(..., ge=1, le=2, examples=[1])
    norm: int = Field(..., examples=[-1])
    regulator: mpf = Field(..., description="log((x + y*sqrt(n))/sigma)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode='after')
    def check_pell(self) -> "UnitData":
        lhs = self.x * self.x - self.n * self.y * self.y
        if lhs != self.norm * self.sigma * self.sigma or self.norm not in (1, -1):
            raise ValueError(
                f"x^2 - n*y^2 = {lhs} is not norm*sigma^2 for "
                f"(x, y, sigma, norm) = ({self.x}, {self.y}, {self.sigma}, {self.norm})"
            )
        return self

    def equals(self, x: int, y: int, sigma: int = 1) -> bool:
        """True iff this unit is (x + y sqrt(n))/sigma."""
        return self.x * sigma == x * self.sigma and self.y * sigma == y * self.sigma

    def __str__(self) -> str:
        text = f"{self.x} + {self.y}*sqrt({self.n})" if self.y != 1 else f"{self.x} + sqrt({self.n})"
        return f"({text})/2" if self.sigma == 2 else text


class FamilyOutcome(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    SKIPPED = "skipped"


class FamilyCheck(BaseModel):
    """
    Outcome of testing the family unit against the true fundamental unit.

    `unit` is the true fundamental unit (None when skipped), so failures
    can be reported with it.
    """

    family: str = Field(..., examples=["n2p1"])
    n: int = Field(..., ge=1, examples=[2])
    radicand: int = Field(..., examples=[5])
    outcome: FamilyOutcome
    unit: Optional[UnitData] = None

    model_config = ConfigDict(frozen=True)

    _validate_family = field_validator('family')(validate_family)
