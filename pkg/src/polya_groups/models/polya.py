"""
Polya group and relative class group of a quadratic field.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from polya_groups.models.forms import AbGroup, QuadForm
from polya_groups.models.quadfield import FundamentalDiscriminant


class PolyaGroup(BaseModel):
    """
    Po(K): subgroup of the class group generated by the ambiguous classes.

    Attributes:
        field: The quadratic field
        generators: One ambiguous form per ramified prime (unreduced)
        group: Structure of the generated subgroup
        order: |Po(K)|
        narrow: True when computed in the narrow class group (real fields only)
    """

    field: FundamentalDiscriminant
    generators: Tuple[QuadForm, ...] = Field(..., description="Ambiguous forms, one per ramified prime")
    group: AbGroup
    order: int = Field(..., ge=1, examples=[2])
    narrow: bool = Field(default=False, description="Computed in the narrow class group")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_order(self) -> "PolyaGroup":
        if self.order != self.group.order:
            raise ValueError(f"order {self.order} != subgroup order {self.group.order}")
        if self.order & (self.order - 1):
            raise ValueError(f"Polya group order of a quadratic field must be a power of 2, got {self.order}")
        return self

    @property
    def is_trivial(self) -> bool:
        """True for a Polya field."""
        return self.order == 1


class RelativeClassGroup(BaseModel):
    """
    Cl(K)/Po(K).

    Example:
        >>> rel.order, rel.trivial    # d = -84
        (1, True)
    """

    field: FundamentalDiscriminant
    order: int = Field(..., ge=1, description="|Cl(K)| / |Po(K)|")
    group: AbGroup = Field(..., description="Structure of the quotient")
    class_number: int = Field(..., ge=1, description="|Cl(K)|")
    po_order: int = Field(..., ge=1, description="|Po(K)|")
    narrow: bool = False

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_index(self) -> "RelativeClassGroup":
        if self.order * self.po_order != self.class_number:
            raise ValueError(
                f"|Cl/Po| * |Po| = {self.order} * {self.po_order} != |Cl| = {self.class_number}"
            )
        if self.group.order != self.order:
            raise ValueError(f"quotient structure has order {self.group.order}, expected {self.order}")
        return self

    @property
    def trivial(self) -> bool:
        return self.order == 1
