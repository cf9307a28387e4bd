"""
Unit tests for the quadratic field service.
"""

import pytest

pytestmark = pytest.mark.unit


class TestMakeField:
    """Test suite for make_field and discriminant_of_radicand."""

    def test_make_field(self, field):
        """make_field should attach ramified primes in order."""
        F = field(-20)

        assert F.ramified == (2, 5)
        assert F.s == 2
        assert field(-5460).ramified == (2, 3, 5, 7, 13)

    def test_make_field_rejects(self):
        """Non-fundamental input should raise NotFundamental."""
        from polya_groups.errors import NotFundamental
        from polya_groups.services.quadfield import make_field

        for d in (0, 1, -12, 45):
            with pytest.raises(NotFundamental):
                make_field(d)

    def test_discriminant_of_radicand(self):
        """d = n for n = 1 mod 4, else 4n."""
        from polya_groups.services.quadfield import discriminant_of_radicand

        assert discriminant_of_radicand(-5).d == -20
        assert discriminant_of_radicand(5).d == 5
        assert discriminant_of_radicand(3).d == 12
        assert discriminant_of_radicand(-1).d == -4
        assert discriminant_of_radicand(-3).d == -3

    def test_discriminant_of_radicand_rejects(self):
        """Radicand 1 and non-square-free radicands should be rejected."""
        from polya_groups.errors import DiscriminantOne, NotSquarefree
        from polya_groups.services.quadfield import discriminant_of_radicand

        with pytest.raises(DiscriminantOne):
            discriminant_of_radicand(1)
        with pytest.raises(NotSquarefree):
            discriminant_of_radicand(8)
        with pytest.raises(NotSquarefree):
            discriminant_of_radicand(0)


class TestAmbiguousForm:
    """Test suite for ambiguous_form."""

    @pytest.mark.parametrize("d, p, expected", [
        (-20, 2, (2, 2, 3)),
        (-20, 5, (5, 0, 1)),
        (-84, 2, (2, 2, 11)),
        (-84, 3, (3, 0, 7)),
        (-23, 23, (23, 23, 6)),
        (40, 2, (2, 0, -5)),
        (40, 5, (5, 0, -2)),
        (-8, 2, (2, 0, 1)),
    ])
    def test_canonical_forms(self, field, d, p, expected):
        """Each ramified prime should get its canonical form of discriminant d."""
        from polya_groups.services.quadfield import ambiguous_form

        data = ambiguous_form(field(d), p)

        assert data.form.as_tuple() == expected
        assert data.form.discriminant == d
        assert data.p == p

    def test_unramified_prime_raises(self, field):
        """A prime not dividing d should raise NotRamified."""
        from polya_groups.errors import NotRamified
        from polya_groups.services.quadfield import ambiguous_form

        with pytest.raises(NotRamified, match="not ramified"):
            ambiguous_form(field(-20), 3)


class TestFundamentalDiscriminants:
    """Test suite for the range enumeration."""

    def test_small_range(self):
        """The negative range should match the known list."""
        from polya_groups.services.quadfield import fundamental_discriminants

        assert fundamental_discriminants(-24, -3) == [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]

    def test_positive_range(self):
        """0 and 1 should be skipped."""
        from polya_groups.services.quadfield import fundamental_discriminants

        assert fundamental_discriminants(-4, 13) == [-4, -3, 5, 8, 12, 13]

    def test_matches_validator(self):
        """Every integer in range should be classified like is_fundamental."""
        from polya_groups.services.quadfield import fundamental_discriminants, is_fundamental

        listed = set(fundamental_discriminants(-500, 500))

        assert listed == {d for d in range(-500, 501) if is_fundamental(d)}

    def test_empty_range(self):
        """lo > hi should give no discriminants."""
        from polya_groups.services.quadfield import fundamental_discriminants

        assert fundamental_discriminants(10, -10) == []


class TestCharacterTable:
    """Test suite for character_table."""

    def test_example(self, field):
        """chi_-23 should start 0, 1, 1, 1, 1, -1."""
        from polya_groups.services.quadfield import character_table

        assert character_table(field(-23))[:6].tolist() == [0, 1, 1, 1, 1, -1]

    @pytest.mark.parametrize("d", [-3, -4, -8, -20, -23, -84, 5, 8, 12, 40, -5460, 24])
    def test_matches_kronecker(self, field, d):
        """The table should equal kronecker(d, a) for every residue."""
        from polya_groups.arith.intarith import kronecker
        from polya_groups.services.quadfield import character_table

        table = character_table(field(d))

        assert len(table) == abs(d)
        assert table.tolist() == [kronecker(d, a) for a in range(abs(d))]
