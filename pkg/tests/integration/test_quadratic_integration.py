"""
Integration tests for class groups and units over the whole desk range.

Each check is exact and runs over every fundamental discriminant in range.
"""

import pytest

pytestmark = pytest.mark.integration


class TestGenusCount:
    """2-rank of imaginary class groups."""

    def test_two_torsion_up_to_5000(self):
        """Cl(d)[2] has 2^(s-1) elements for every -5000 <= d < 0."""
        from polya_groups.services.forms import class_group_definite
        from polya_groups.services.quadfield import fundamental_discriminants, make_field

        for d in fundamental_discriminants(-5000, -3):
            F = make_field(d)
            assert class_group_definite(F).two_torsion_count() == 2 ** (F.s - 1), d


class TestUnitsUpTo10k:
    """Fundamental units for every real d <= 10^4."""

    @pytest.fixture(scope="class")
    def units(self):
        from polya_groups.services.quadfield import fundamental_discriminants, make_field
        from polya_groups.services.units import fundamental_unit

        return [(make_field(d), fundamental_unit(make_field(d), precision=50))
                for d in fundamental_discriminants(5, 10_000)]

    def test_minimal_by_brute_force(self, units):
        """Searching y <= 10^4 finds no unit > 1 below eps."""
        from polya_groups.services.units import brute_force_unit

        for F, u in units:
            reach = u.y * (2 // u.sigma) if u.n % 4 == 1 else u.y
            expected = (u.x, u.y, u.sigma) if reach <= 10_000 else None
            assert brute_force_unit(F, 10_000) == expected, F.d

    def test_norm_follows_period_parity(self, units):
        """N(eps) = -1 exactly when the period of sqrt(n) is odd."""
        from polya_groups.services.units import cf_sqrt

        for F, u in units:
            assert (u.norm == -1) == (cf_sqrt(F.radicand).period_length % 2 == 1), F.d

    def test_regulator_stable_under_doubled_precision(self, units):
        """Recomputing R at 100 digits moves it by < 10^-40."""
        from mpmath import mp, mpf
        from polya_groups.services.units import regulator

        for _, u in units:
            wide = regulator(u.x, u.y, u.n, u.sigma, 100)
            with mp.workdps(100):
                assert abs(u.regulator - wide) < mpf("1e-40"), u.d
