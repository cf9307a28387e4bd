"""
Ramification scenario of a prime in two fields K1, K2.
"""

from pydantic import BaseModel, ConfigDict, Field


class RamificationScenario(BaseModel):
    """
    Ramification indices e1 = e(P1/p), e2 = e(P2/p) of a prime p.

    Example:
        >>> sc = RamificationScenario(e1=2, e2=3, p=5)
        >>> sc.tame1, sc.tame2
        (True, True)
    """

    e1: int = Field(..., ge=1, examples=[2])
    e2: int = Field(..., ge=1, examples=[3])
    p: int = Field(..., ge=2, examples=[5])

    model_config = ConfigDict(frozen=True)

    @property
    def tame1(self) -> bool:
        return self.e1 % self.p != 0

    @property
    def tame2(self) -> bool:
        return self.e2 % self.p != 0
