"""
Unit tests for the reusable field validators.
"""

import pytest

pytestmark = pytest.mark.unit


class TestFundamentalDiscriminant:
    """Test suite for the fundamental discriminant validators."""

    @pytest.mark.parametrize("d", [-3, -4, -7, -8, -20, -84, 5, 8, 12, 13, 40, -5460])
    def test_accepts_fundamental(self, d):
        """Fundamental discriminants should validate unchanged."""
        from polya_groups.validators import validate_fundamental_discriminant

        assert validate_fundamental_discriminant(d) == d

    @pytest.mark.parametrize("d", [0, 1, -1, 2, -12, 9, 45, -16, 4, 20])
    def test_rejects_non_fundamental(self, d):
        """Non-fundamental integers should raise NotFundamental."""
        from polya_groups.errors import NotFundamental
        from polya_groups.validators import validate_fundamental_discriminant

        with pytest.raises(NotFundamental, match="not a fundamental discriminant"):
            validate_fundamental_discriminant(d)

    def test_not_fundamental_is_value_error(self):
        """NotFundamental should be catchable as ValueError."""
        from polya_groups.validators import validate_fundamental_discriminant

        with pytest.raises(ValueError):
            validate_fundamental_discriminant(45)


class TestSquarefree:
    """Test suite for validate_squarefree."""

    def test_accepts_squarefree(self):
        """Square-free integers should pass, including negatives."""
        from polya_groups.validators import validate_squarefree

        assert validate_squarefree(-5) == -5
        assert validate_squarefree(483) == 483

    @pytest.mark.parametrize("n", [0, 4, 18, -50])
    def test_rejects(self, n):
        """Zero and square multiples should raise NotSquarefree."""
        from polya_groups.errors import NotSquarefree
        from polya_groups.validators import validate_squarefree

        with pytest.raises(NotSquarefree):
            validate_squarefree(n)


class TestOtherValidators:
    """Test suite for family, range and format validators."""

    def test_validate_family(self):
        """Known tags should pass, unknown tags should list valid ones."""
        from polya_groups.errors import InputError
        from polya_groups.validators import validate_family

        assert validate_family('n2p1') == 'n2p1'
        with pytest.raises(InputError, match="Valid families"):
            validate_family('n2m1')

    def test_validate_positive(self):
        """validate_positive should reject n < 1."""
        from polya_groups.errors import OutOfRange
        from polya_groups.validators import validate_optional_positive, validate_positive

        assert validate_positive(1) == 1
        assert validate_optional_positive(None) is None
        with pytest.raises(OutOfRange):
            validate_positive(0)

    def test_validate_output_format(self):
        """Only csv and json should be accepted."""
        from polya_groups.errors import InputError
        from polya_groups.validators import validate_output_format

        assert validate_output_format('json') == 'json'
        with pytest.raises(InputError, match="Invalid output format"):
            validate_output_format('xlsx')
