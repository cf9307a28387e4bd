"""
Pydantic models for the domain types and table rows.

Factorization is imported first: the integer primitives depend on it and
every other model depends on the primitives through the validators.
"""

from polya_groups.models.factorization import Factorization
from polya_groups.models.forms import AbGroup, QuadForm
from polya_groups.models.quadfield import AmbiguousPrimeData, FundamentalDiscriminant
from polya_groups.models.polya import PolyaGroup, RelativeClassGroup
from polya_groups.models.units import ContinuedFraction, FamilyCheck, FamilyOutcome, UnitData
from polya_groups.models.sieve import SieveReport
from polya_groups.models.abelian import (
    AbelianField,
    DirichletCharacter,
    DiscriminantBreakdown,
    HMinusRow,
    PrimeDiscriminantEntry,
    UnitGroup,
)
from polya_groups.models.ramify import RamificationScenario
from polya_groups.models.requests import SurveyConfig
from polya_groups.models.reports import (
    CyclotomicRow,
    FamilyRow,
    GrowthBucket,
    QuadReport,
    SieveRow,
    SurveyRow,
)

__all__ = [
    'Factorization',
    'AbGroup',
    'QuadForm',
    'AmbiguousPrimeData',
    'FundamentalDiscriminant',
    'PolyaGroup',
    'RelativeClassGroup',
    'ContinuedFraction',
    'FamilyCheck',
    'FamilyOutcome',
    'UnitData',
    'SieveReport',
    'AbelianField',
    'DirichletCharacter',
    'DiscriminantBreakdown',
    'HMinusRow',
    'PrimeDiscriminantEntry',
    'UnitGroup',
    'RamificationScenario',
    'SurveyConfig',
    'CyclotomicRow',
    'FamilyRow',
    'GrowthBucket',
    'QuadReport',
    'SieveRow',
    'SurveyRow',
]
