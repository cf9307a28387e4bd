"""
Factorization model: exact prime factorization of a nonzero integer.
"""

from math import prod
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Factorization(BaseModel):
    """
    Prime factorization of |n| as (p, e) pairs sorted ascending by p.

    The empty factorization represents 1.

    Example:
        >>> f = Factorization(pairs=((2, 5), (3, 1), (7, 1), (11, 1)))
        >>> f.value
        7392
        >>> f.primes
        (2, 3, 7, 11)
    """

    pairs: Tuple[Tuple[int, int], ...] = Field(
        default=(),
        description="(prime, exponent) pairs sorted by prime",
        examples=[((2, 2), (5, 1))]
    )

    model_config = ConfigDict(frozen=True)

    @field_validator('pairs')
    @classmethod
    def validate_pairs(cls, v: Tuple[Tuple[int, int], ...]) -> Tuple[Tuple[int, int], ...]:
        """Primes strictly increasing, exponents positive."""
        last = 1
        for p, e in v:
            if p <= last:
                raise ValueError(f"primes must be strictly increasing and > 1, got {p} after {last}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            last = p
        return v

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def value(self) -> int:
        """Reconstructed |n|."""
        return prod(p ** e for p, e in self.pairs)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def exponent(self, p: int) -> int:
        """Exponent of p (0 when p does not divide n)."""
        return self.as_dict().get(p, 0)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)
