"""
Table row models, one per CLI command.

Field names match the column names documented in config/survey.yaml;
api.tables orders and formats them.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class QuadReport(BaseModel):
    """Per-field report of `quad`."""

    d: int = Field(..., examples=[-84])
    h: int = Field(..., ge=1, description="Class number (wide for d > 0)", examples=[4])
    cl_structure: str = Field(..., examples=["[2, 2]"])
    s: int = Field(..., ge=1, examples=[3])
    po_order: int = Field(..., ge=1, examples=[4])
    po_structure: str = Field(..., examples=["[2, 2]"])
    rel_order: int = Field(..., ge=1, examples=[1])
    rel_structure: str = Field(..., examples=["1"])
    narrow_h: int = Field(..., ge=1, examples=[4])
    unit: Optional[str] = Field(default=None, examples=["3 + sqrt(10)"])
    unit_norm: Optional[int] = Field(default=None, examples=[-1])
    regulator: Optional[float] = Field(default=None, examples=[1.8184464592320668])

    model_config = ConfigDict(frozen=True)


class SurveyRow(BaseModel):
    """One imaginary quadratic field of `survey`."""

    d: int = Field(..., lt=0, examples=[-84])
    h: int = Field(..., ge=1)
    s: int = Field(..., ge=1)
    po_order: int = Field(..., ge=1)
    h_ratio: float
    po_ratio: float
    trivial_relative: int = Field(..., ge=0, le=1)

    model_config = ConfigDict(frozen=True)


class GrowthBucket(BaseModel):
    """One decade bucket_lo <= |d| < bucket_hi of `growth`."""

    bucket_lo: int = Field(..., ge=1, examples=[10000])
    bucket_hi: int = Field(..., examples=[100000])
    fields: int = Field(..., ge=0)
    median_log_h_ratio: Optional[float] = None
    max_log_h_ratio: Optional[float] = None
    max_po_ratio: Optional[float] = None

    model_config = ConfigDict(frozen=True)


class FamilyRow(BaseModel):
    """One family member of `families`."""

    family: str = Field(..., examples=["4n2m1"])
    n: int = Field(..., ge=1)
    radicand: int
    disc: Optional[int] = None
    squarefree: int = Field(..., ge=0, le=1)
    unit_holds: str = Field(..., examples=["holds"])
    unit: Optional[str] = None
    regulator: Optional[float] = None
    log_regulator_ratio: Optional[float] = None
    h: Optional[int] = None
    po_order: Optional[int] = None
    rel_order: Optional[int] = None
    log_rel_order: Optional[float] = None
    log_sqrt_disc: Optional[float] = None

    model_config = ConfigDict(frozen=True)


class CyclotomicRow(BaseModel):
    """One prime cyclotomic field Q(zeta_p) of `cyclotomic`."""

    p: int = Field(..., ge=3, examples=[23])
    degree: int
    abs_disc: int
    abs_disc_oracle: int
    lambda_max: str = Field(..., description="Exact fraction", examples=["1/22"])
    lambda_ok: int = Field(..., ge=0, le=1)
    h_minus: int = Field(..., ge=1)
    ratio: float
    plus_disc_ratio: int
    regulator_ratio_constant: int
    polya_bound_ratio: float
    degree_over_logdisc: float

    model_config = ConfigDict(frozen=True)


class SieveRow(BaseModel):
    """One n of `sieve`."""

    n: int = Field(..., ge=1)
    family_value: int
    squarefree: int = Field(..., ge=0, le=1)
    witness_p: Optional[int] = None

    model_config = ConfigDict(frozen=True)
