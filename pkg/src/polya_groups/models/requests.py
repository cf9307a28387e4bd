"""
Request models for the survey commands.

SurveyConfig validates every CLI input before any computation starts, so
bad arguments fail fast with a ValidationError (exit code 2 in the CLI).
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from polya_groups.config import get_catalog
from polya_groups.validators import (
    validate_family,
    validate_optional_positive,
    validate_output_format,
)

# Smallest admissible bound per command.
MIN_BOUND = {'survey': 3, 'growth': 1000}
MIN_N = {'families': 10, 'sieve': 1}
MAX_PMAX = 100


class SurveyConfig(BaseModel):
    """
    Validated configuration of one CLI command.

    Attributes:
        command: One of the catalog commands
        disc: Discriminant for `quad`
        bound: B for `survey` / `growth` (|d| <= B)
        n_max: N for `families` / `sieve`
        family: Family tag for `sieve`
        pmax: Largest prime for `cyclotomic`
        fmt: 'csv' or 'json'
        out: Output path, stdout when None
        workers: Worker processes (>= 1)
        precision: Decimal digits for regulators and h^-

    Example:
        >>> cfg = SurveyConfig(command='survey', bound=100)
        >>> cfg.workers
        1
    """

    command: str = Field(..., description="CLI command", examples=["survey"])
    disc: Optional[int] = Field(default=None, description="Fundamental discriminant for quad", examples=[-84])
    bound: Optional[int] = Field(default=None, description="Range bound B", examples=[10000])
    n_max: Optional[int] = Field(default=None, description="Family range N", examples=[1000])
    family: Optional[str] = Field(default=None, description="Family tag", examples=["4n2m1"])
    pmax: Optional[int] = Field(default=None, description="Largest prime for cyclotomic", examples=[100])
    fmt: str = Field(default="csv", description="Output format", examples=["csv"])
    out: Optional[str] = Field(default=None, description="Output path (stdout if omitted)")
    workers: int = Field(default=1, ge=1, description="Worker processes")
    precision: int = Field(default=50, ge=15, description="Decimal digits")

    model_config = ConfigDict(frozen=True)

    _validate_bound = field_validator('bound')(validate_optional_positive)
    _validate_n_max = field_validator('n_max')(validate_optional_positive)
    _validate_fmt = field_validator('fmt')(validate_output_format)

    @field_validator('command')
    @classmethod
    def validate_command(cls, v: str) -> str:
        commands = get_catalog().commands
        if v not in commands:
            raise ValueError(f"Unknown command: {v!r}. Valid commands: {sorted(commands)}")
        return v

    @field_validator('family')
    @classmethod
    def validate_family_tag(cls, v: Optional[str]) -> Optional[str]:
        return v if v is None else validate_family(v)

    @model_validator(mode='after')
    def check_command_arguments(self) -> "SurveyConfig":
        cmd = self.command
        if cmd == 'quad' and self.disc is None:
            raise ValueError("quad requires a discriminant (-d/--disc)")
        if cmd in MIN_BOUND:
            if self.bound is None or self.bound < MIN_BOUND[cmd]:
                raise ValueError(f"{cmd} requires -B/--bound >= {MIN_BOUND[cmd]}, got {self.bound}")
        if cmd in MIN_N:
            if self.n_max is None or self.n_max < MIN_N[cmd]:
                raise ValueError(f"{cmd} requires -N >= {MIN_N[cmd]}, got {self.n_max}")
        if cmd == 'sieve' and self.family is None:
            raise ValueError("sieve requires --family")
        if cmd == 'cyclotomic':
            if self.pmax is None or not 3 <= self.pmax <= MAX_PMAX:
                raise ValueError(f"cyclotomic requires 3 <= --pmax <= {MAX_PMAX}, got {self.pmax}")
        return self
