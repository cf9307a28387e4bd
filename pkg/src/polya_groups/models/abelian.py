"""
Abelian field models: (Z/mZ)* decompositions, fields as subgroups,
Dirichlet characters and the per-prime discriminant breakdown.
"""

from fractions import Fraction
from math import prod
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class UnitGroup(BaseModel):
    """
    Cyclic decomposition of (Z/mZ)* with an exact discrete-log table.

    Factor i is generated by `generators[i]` of order `orders[i]` and
    belongs to the prime `factor_primes[i]`. Odd prime powers give one
    factor (primitive root); 4 gives {-1}; 2^k with k >= 3 gives -1 and 5.

    Example:
        >>> G = unit_group(8)
        >>> G.orders, G.generators
        ((2, 2), (7, 5))
    """

    m: int = Field(..., ge=1, examples=[8])
    generators: Tuple[int, ...] = Field(default=(), description="Global residues mod m")
    orders: Tuple[int, ...] = Field(default=(), description="Orders of the generators")
    factor_primes: Tuple[int, ...] = Field(default=(), description="Prime owning each factor")
    dlog: Dict[int, Tuple[int, ...]] = Field(default_factory=dict, repr=False, exclude=True)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_table(self) -> "UnitGroup":
        if not (len(self.generators) == len(self.orders) == len(self.factor_primes)):
            raise ValueError("generators, orders and factor_primes must align")
        if len(self.dlog) != prod(self.orders):
            raise ValueError(f"discrete-log table has {len(self.dlog)} entries, expected {prod(self.orders)}")
        return self

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(sorted(self.dlog))


class AbelianField(BaseModel):
    """
    Fixed field of a subgroup H <= (Z/mZ)* inside Q(zeta_m).

    After make_abelian the modulus equals the conductor.

    Example:
        >>> K = make_abelian(5, [4])
        >>> K.degree, K.conductor
        (2, 5)
    """

    m: int = Field(..., ge=1, description="Modulus", examples=[5])
    subgroup: Tuple[int, ...] = Field(..., min_length=1, description="Elements of H, ascending", examples=[(1, 4)])
    generators: Tuple[int, ...] = Field(default=(), description="Generators of H as given", examples=[(4,)])
    degree: int = Field(..., ge=1, description="phi(m) / |H|", examples=[2])
    conductor: int = Field(..., ge=1, examples=[5])

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_subgroup(self) -> "AbelianField":
        if self.m % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide modulus {self.m}")
        elems = set(self.subgroup)
        if 1 % self.m not in elems:
            raise ValueError("H must contain 1")
        for x in self.generators:
            if x % self.m not in elems:
                raise ValueError(f"generator {x} not in H")
        for x in self.subgroup:
            for y in self.subgroup:
                if x * y % self.m not in elems:
                    raise ValueError(f"H is not closed: {x} * {y} = {x * y % self.m} mod {self.m}")
        return self

    @property
    def is_real(self) -> bool:
        """True iff complex conjugation (-1) lies in H."""
        return self.m <= 2 or (self.m - 1) in self.subgroup

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        """(conductor, H) identifies the field."""
        return (self.m, self.subgroup)

    def __str__(self) -> str:
        return f"K(m={self.m}, |H|={len(self.subgroup)}, degree={self.degree})"


class DirichletCharacter(BaseModel):
    """
    Character of (Z/mZ)* given by an exponent vector over a UnitGroup.

    chi(g_i) = exp(2 pi i exponents[i] / orders[i]).
    """

    modulus: int = Field(..., ge=1, examples=[5])
    exponents: Tuple[int, ...] = Field(..., examples=[(2,)])
    orders: Tuple[int, ...] = Field(..., examples=[(4,)])
    conductor: int = Field(..., ge=1, examples=[5])
    parity: int = Field(..., description="chi(-1): +1 even, -1 odd", examples=[1])

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_character(self) -> "DirichletCharacter":
        if self.modulus % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {self.modulus}")
        if self.parity not in (1, -1):
            raise ValueError(f"parity must be +1 or -1, got {self.parity}")
        if len(self.exponents) != len(self.orders):
            raise ValueError("exponents and orders must align")
        return self

    @property
    def is_odd(self) -> bool:
        return self.parity == -1

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)


class PrimeDiscriminantEntry(BaseModel):
    """One prime p_i | m_K of the conductor-exponent discriminant formula."""

    p: int = Field(..., examples=[5])
    alpha: int = Field(..., ge=1, description="Exponent of p in the conductor", examples=[1])
    u: Fraction = Field(..., description="[K.Q(zeta_m'):Q(zeta_m')] / p^(alpha-1)", examples=["2"])
    lam: Fraction = Field(..., description="lambda_i", examples=["1/2"])
    exponent: int = Field(..., ge=0, description="(alpha - lambda) * [K:Q], the valuation of |d_K|")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class DiscriminantBreakdown(BaseModel):
    """
    |d_K| = (prod p_i^(alpha_i - lambda_i))^[K:Q].

    Example:
        >>> bd = discriminant_from_exponents(make_abelian(5, []))
        >>> bd.abs_disc, bd.entries[0].lam
        (125, Fraction(1, 4))
    """

    degree: int = Field(..., ge=1)
    entries: Tuple[PrimeDiscriminantEntry, ...] = ()
    abs_disc: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_product(self) -> "DiscriminantBreakdown":
        value = prod(e.p ** e.exponent for e in self.entries)
        if value != self.abs_disc:
            raise ValueError(f"|d_K| = {self.abs_disc} but the prime entries give {value}")
        return self

    @property
    def lambda_max(self) -> Fraction:
        return max((e.lam for e in self.entries), default=Fraction(0))


class HMinusRow(BaseModel):
    """Relative class number of Q(zeta_p) against log sqrt|d_K|."""

    p: int = Field(..., examples=[23])
    h_minus: int = Field(..., ge=1, examples=[3])
    abs_disc: int = Field(..., ge=1, description="p^(p-2)")
    ratio: float = Field(..., description="log h^- / log sqrt|d_K|", examples=[0.0333])

    model_config = ConfigDict(frozen=True)
