"""
Unit tests for the Pydantic domain models.

Models validate their own invariants; the services build them.
"""

import pytest
from pydantic import ValidationError

pytestmark = pytest.mark.unit


class TestFactorization:
    """Test suite for Factorization model."""

    def test_value_and_primes(self):
        """value should reconstruct |n| and primes should list p in order."""
        from polya_groups.models import Factorization

        f = Factorization(pairs=((2, 5), (3, 1), (7, 1), (11, 1)))

        assert f.value == 7392
        assert f.primes == (2, 3, 7, 11)
        assert f.exponent(2) == 5
        assert f.exponent(5) == 0
        assert str(f) == "2^5 * 3 * 7 * 11"

    def test_empty_is_one(self):
        """The empty factorization should represent 1."""
        from polya_groups.models import Factorization

        f = Factorization()

        assert f.value == 1
        assert str(f) == "1"
        assert f.is_squarefree

    def test_rejects_unsorted_primes(self):
        """Primes out of order should fail validation."""
        from polya_groups.models import Factorization

        with pytest.raises(ValidationError, match="strictly increasing"):
            Factorization(pairs=((3, 1), (2, 1)))

    def test_rejects_zero_exponent(self):
        """Exponents below 1 should fail validation."""
        from polya_groups.models import Factorization

        with pytest.raises(ValidationError, match="exponent"):
            Factorization(pairs=((2, 0),))

    def test_frozen(self):
        """Factorization should be immutable."""
        from polya_groups.models import Factorization

        f = Factorization(pairs=((2, 1),))
        with pytest.raises(ValidationError):
            f.pairs = ()


class TestQuadForm:
    """Test suite for QuadForm and AbGroup models."""

    def test_discriminant_and_str(self):
        """discriminant should be b^2 - 4ac."""
        from polya_groups.models import QuadForm

        f = QuadForm(a=2, b=2, c=3)

        assert f.discriminant == -20
        assert str(f) == "(2,2,3)"
        assert f.is_positive_definite
        assert f.inverse() == QuadForm(a=2, b=-2, c=3)

    def test_primitive(self):
        """is_primitive should check gcd(a, b, c)."""
        from polya_groups.models import QuadForm

        assert QuadForm(a=1, b=1, c=6).is_primitive
        assert not QuadForm(a=2, b=2, c=4).is_primitive

    def test_abgroup_structure(self):
        """AbGroup should render invariant factors and count 2-torsion."""
        from polya_groups.models import AbGroup, QuadForm

        g = AbGroup(
            discriminant=-84,
            generators=(QuadForm(a=2, b=2, c=11), QuadForm(a=3, b=0, c=7)),
            divisors=(2, 2),
            order=4,
        )

        assert g.structure == "[2, 2]"
        assert g.two_torsion_count() == 4
        assert g.exponent == 2
        assert not g.is_cyclic

    def test_trivial_abgroup(self):
        """A group with no divisors should be trivial with structure '1'."""
        from polya_groups.models import AbGroup

        g = AbGroup(discriminant=-23 * 4 + 1, order=1)

        assert g.is_trivial
        assert g.structure == "1"
        assert g.exponent == 1

    def test_abgroup_rejects_broken_chain(self):
        """Invariant factors must divide each other."""
        from polya_groups.models import AbGroup, QuadForm

        forms = (QuadForm(a=1, b=1, c=6), QuadForm(a=2, b=1, c=3))
        with pytest.raises(ValidationError, match="divisibility chain"):
            AbGroup(discriminant=-23, generators=forms, divisors=(2, 3), order=6)

    def test_abgroup_rejects_wrong_order(self):
        """order must equal the product of the divisors."""
        from polya_groups.models import AbGroup, QuadForm

        with pytest.raises(ValidationError, match="product"):
            AbGroup(discriminant=-23, generators=(QuadForm(a=2, b=1, c=3),), divisors=(3,), order=6)

    def test_log_without_table_raises(self):
        """log() should raise KeyError when no table was built."""
        from polya_groups.models import AbGroup, QuadForm

        g = AbGroup(discriminant=-23, generators=(QuadForm(a=2, b=1, c=3),), divisors=(3,), order=3)
        with pytest.raises(KeyError):
            g.log(QuadForm(a=2, b=1, c=3))


class TestFundamentalDiscriminantModel:
    """Test suite for FundamentalDiscriminant model."""

    def test_properties(self):
        """s, radicand and roots_of_unity should follow d."""
        from polya_groups.models import FundamentalDiscriminant

        F = FundamentalDiscriminant(d=-20, ramified=(2, 5))

        assert F.s == 2
        assert F.radicand == -5
        assert F.roots_of_unity == 2
        assert F.ramification_index(5) == 2
        assert F.ramification_index(3) == 1
        assert FundamentalDiscriminant(d=-4, ramified=(2,)).roots_of_unity == 4
        assert FundamentalDiscriminant(d=13, ramified=(13,)).radicand == 13

    def test_rejects_non_fundamental(self):
        """d must be a fundamental discriminant."""
        from polya_groups.models import FundamentalDiscriminant

        with pytest.raises(ValidationError, match="not a fundamental discriminant"):
            FundamentalDiscriminant(d=-12, ramified=(2, 3))

    def test_rejects_missing_prime(self):
        """Every prime factor of d must be listed."""
        from polya_groups.models import FundamentalDiscriminant

        with pytest.raises(ValidationError, match="miss a prime"):
            FundamentalDiscriminant(d=-20, ramified=(2,))

    def test_ambiguous_data_leading_coefficient(self):
        """Ambiguous forms must lead with their prime."""
        from polya_groups.models import AmbiguousPrimeData, QuadForm

        with pytest.raises(ValidationError, match="leading coefficient"):
            AmbiguousPrimeData(p=5, form=QuadForm(a=2, b=2, c=3))


class TestUnitModels:
    """Test suite for ContinuedFraction and UnitData models."""

    def test_continued_fraction(self):
        """The period must end in 2*a0."""
        from polya_groups.models import ContinuedFraction

        cf = ContinuedFraction(n=3, a0=1, period=(1, 2))

        assert cf.period_length == 2
        assert str(cf) == "[1; (1, 2)]"
        with pytest.raises(ValidationError, match="must end in"):
            ContinuedFraction(n=3, a0=1, period=(1, 3))

    def test_unit_data_pell_check(self):
        """UnitData should verify x^2 - n y^2 = norm * sigma^2."""
        from mpmath import mpf
        from polya_groups.models import UnitData

        u = UnitData(d=40, n=10, x=3, y=1, sigma=1, norm=-1, regulator=mpf("1.8184464592320668"))

        assert str(u) == "3 + sqrt(10)"
        assert u.equals(3, 1)
        assert not u.equals(19, 6)
        with pytest.raises(ValidationError, match="norm"):
            UnitData(d=40, n=10, x=3, y=1, sigma=1, norm=1, regulator=mpf(1))

    def test_half_integral_unit_str(self):
        """sigma = 2 units should print as halves."""
        from mpmath import mpf
        from polya_groups.models import UnitData

        u = UnitData(d=13, n=13, x=3, y=1, sigma=2, norm=-1, regulator=mpf("1.19"))

        assert str(u) == "(3 + sqrt(13))/2"
        assert u.equals(6, 2, 4)

    def test_family_check_validates_tag(self):
        """FamilyCheck should reject tags missing from the catalog."""
        from polya_groups.models import FamilyCheck, FamilyOutcome

        with pytest.raises(ValidationError, match="Invalid family"):
            FamilyCheck(family='n2m1', n=1, radicand=0, outcome=FamilyOutcome.SKIPPED)


class TestSieveReport:
    """Test suite for SieveReport model."""

    def test_counts_must_add_up(self):
        """count + excluded must equal the bound."""
        from polya_groups.models import SieveReport

        with pytest.raises(ValidationError, match="!= bound"):
            SieveReport(family='n2p1', bound=7, count=7, excluded=((7, 5),))

    def test_density_floor_is_exact(self):
        """meets_floor should compare count/bound with 1/6 exactly."""
        from polya_groups.models import SieveReport

        at_floor = SieveReport(
            family='n2p1', bound=6, count=1,
            excluded=tuple((n, 5) for n in range(2, 7)),
        )

        assert at_floor.meets_floor
        assert at_floor.witness_map()[2] == 5


class TestAbelianModels:
    """Test suite for the abelian field models."""

    def test_subgroup_must_be_closed(self):
        """H must be closed under multiplication mod m."""
        from polya_groups.models import AbelianField

        with pytest.raises(ValidationError, match="not closed"):
            AbelianField(m=7, subgroup=(1, 2), degree=3, conductor=7)

    def test_is_real(self):
        """is_real should test whether -1 lies in H."""
        from polya_groups.models import AbelianField

        assert AbelianField(m=5, subgroup=(1, 4), degree=2, conductor=5).is_real
        assert not AbelianField(m=5, subgroup=(1,), degree=4, conductor=5).is_real

    def test_breakdown_product(self):
        """abs_disc must equal the product over the prime entries."""
        from fractions import Fraction
        from polya_groups.models import DiscriminantBreakdown, PrimeDiscriminantEntry

        entry = PrimeDiscriminantEntry(p=5, alpha=1, u=Fraction(2), lam=Fraction(1, 2), exponent=1)

        assert DiscriminantBreakdown(degree=2, entries=(entry,), abs_disc=5).lambda_max == Fraction(1, 2)
        with pytest.raises(ValidationError, match="prime entries"):
            DiscriminantBreakdown(degree=2, entries=(entry,), abs_disc=25)

    def test_prime_entry_json_schema(self):
        """The Fraction fields should carry JSON-safe examples in the schema."""
        from polya_groups.models.abelian import PrimeDiscriminantEntry

        schema = PrimeDiscriminantEntry.model_json_schema()

        assert schema['properties']['u']['examples'] == ["2"]
        assert schema['properties']['lam']['examples'] == ["1/2"]


class TestSurveyConfig:
    """Test suite for SurveyConfig request model."""

    def test_defaults(self):
        """A minimal survey request should use csv and one worker."""
        from polya_groups.models import SurveyConfig

        cfg = SurveyConfig(command='survey', bound=100)

        assert cfg.fmt == 'csv'
        assert cfg.workers == 1
        assert cfg.out is None

    def test_unknown_command(self):
        """Commands outside the catalog should be rejected."""
        from polya_groups.models import SurveyConfig

        with pytest.raises(ValidationError, match="Unknown command"):
            SurveyConfig(command='plot')

    @pytest.mark.parametrize("kwargs, message", [
        ({'command': 'quad'}, "requires a discriminant"),
        ({'command': 'survey', 'bound': 2}, "bound >= 3"),
        ({'command': 'growth', 'bound': 999}, "bound >= 1000"),
        ({'command': 'families', 'n_max': 9}, "-N >= 10"),
        ({'command': 'sieve', 'n_max': 10}, "requires --family"),
        ({'command': 'cyclotomic', 'pmax': 101}, "pmax"),
        ({'command': 'survey', 'bound': 0}, "positive"),
        ({'command': 'survey', 'bound': 10, 'fmt': 'xml'}, "output format"),
        ({'command': 'sieve', 'n_max': 10, 'family': 'nope'}, "Invalid family"),
    ])
    def test_rejects_bad_arguments(self, kwargs, message):
        """Each command should reject missing or out-of-range arguments."""
        from polya_groups.models import SurveyConfig

        with pytest.raises(ValidationError, match=message):
            SurveyConfig(**kwargs)

    def test_workers_must_be_positive(self):
        """workers < 1 should be rejected."""
        from polya_groups.models import SurveyConfig

        with pytest.raises(ValidationError):
            SurveyConfig(command='survey', bound=10, workers=0)
