"""
Square-free sieve report.
"""

from fractions import Fraction
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polya_groups.validators import validate_family

DENSITY_FLOOR = Fraction(1, 6)


class SieveReport(BaseModel):
    """
    S_N for one family: the n <= N whose family value is square-free.

    Attributes:
        family: Family tag
        bound: N
        count: |S_N|
        excluded: (n, p) pairs, ascending in n, p the smallest prime with p^2 | value
        prime_counts: p -> |S_{N,p}|, the number of n <= N with p^2 | value (nonzero only)

    Example:
        >>> report.count, report.excluded     # n2p1, N = 7
        (6, ((7, 5),))
    """

    family: str = Field(..., examples=["4n2m1"])
    bound: int = Field(..., ge=1, description="N", examples=[1000])
    count: int = Field(..., ge=0, description="|S_N|")
    excluded: Tuple[Tuple[int, int], ...] = Field(
        default=(),
        description="Excluded n with the witness prime p"
    )
    prime_counts: Dict[int, int] = Field(
        default_factory=dict,
        description="|S_{N,p}| per sieved prime with a nonzero count"
    )

    model_config = ConfigDict(frozen=True)

    _validate_family = field_validator('family')(validate_family)

    @model_validator(mode='after')
    def check_counts(self) -> "SieveReport":
        if self.count > self.bound:
            raise ValueError(f"count {self.count} exceeds bound {self.bound}")
        if self.count + len(self.excluded) != self.bound:
            raise ValueError(
                f"count {self.count} + excluded {len(self.excluded)} != bound {self.bound}"
            )
        return self

    @property
    def density(self) -> float:
        return self.count / self.bound

    @property
    def meets_floor(self) -> bool:
        """Density >= 1/6, compared exactly."""
        return Fraction(self.count, self.bound) >= DENSITY_FLOOR

    def witness_map(self) -> Dict[int, int]:
        return dict(self.excluded)
