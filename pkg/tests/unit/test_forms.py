"""
Unit tests for binary quadratic forms and class groups.
"""

import pytest

pytestmark = pytest.mark.unit


class TestReduction:
    """Test suite for form reduction."""

    def test_reduce_definite(self):
        """Reduction should reach |b| <= a <= c."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import reduce_definite

        assert reduce_definite(QuadForm(a=2, b=2, c=1)) == QuadForm(a=1, b=0, c=1)
        assert reduce_definite(QuadForm(a=6, b=1, c=1)) == QuadForm(a=1, b=1, c=6)
        assert reduce_definite(QuadForm(a=3, b=-2, c=2)) == QuadForm(a=2, b=2, c=3)

    def test_reduce_definite_rejects(self):
        """Indefinite, negative and imprimitive forms should be rejected."""
        from polya_groups.errors import NotPrimitive, WrongSign
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import reduce_definite

        with pytest.raises(WrongSign):
            reduce_definite(QuadForm(a=-1, b=0, c=-5))
        with pytest.raises(WrongSign):
            reduce_definite(QuadForm(a=1, b=0, c=-5))
        with pytest.raises(NotPrimitive):
            reduce_definite(QuadForm(a=2, b=2, c=4))

    def test_reduce_indefinite_is_reduced(self):
        """The result should satisfy the indefinite reduction inequalities."""
        from math import isqrt
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import reduce_indefinite

        for f in (QuadForm(a=1, b=0, c=-10), QuadForm(a=7, b=13, c=5), QuadForm(a=-3, b=4, c=2)):
            g = reduce_indefinite(f)
            s = isqrt(g.discriminant)
            assert g.discriminant == f.discriminant
            assert 0 < g.b <= s
            assert s < 2 * abs(g.a) + g.b
            assert 2 * abs(g.a) - g.b <= s

    def test_reduce_indefinite_rejects(self):
        """Definite and square discriminants should be rejected."""
        from polya_groups.errors import PerfectSquare, WrongSign
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import reduce_indefinite

        with pytest.raises(WrongSign):
            reduce_indefinite(QuadForm(a=1, b=1, c=6))
        with pytest.raises(PerfectSquare):
            reduce_indefinite(QuadForm(a=1, b=0, c=-4))

    def test_indefinite_cycle(self):
        """Every cycle member should be reduced of the same discriminant."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import indefinite_cycle

        cycle = indefinite_cycle(QuadForm(a=1, b=0, c=-3))

        assert cycle
        assert len(set(cycle)) == len(cycle)
        assert all(f.discriminant == 12 for f in cycle)

    def test_principal_form(self):
        """principal_form should follow d mod 4."""
        from polya_groups.errors import OutOfRange
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import principal_form

        assert principal_form(-20) == QuadForm(a=1, b=0, c=5)
        assert principal_form(5) == QuadForm(a=1, b=1, c=-1)
        with pytest.raises(OutOfRange):
            principal_form(9)


class TestEnumeration:
    """Test suite for reduced form lists and class numbers."""

    def test_reduced_forms_definite(self):
        """d = -23 should have three reduced forms."""
        from polya_groups.services.forms import reduced_forms_definite

        assert [str(f) for f in reduced_forms_definite(-23)] == ['(1,1,6)', '(2,-1,3)', '(2,1,3)']

    @pytest.mark.parametrize("d, h", [
        (-3, 1), (-4, 1), (-7, 1), (-8, 1), (-15, 2), (-20, 2), (-23, 3),
        (-47, 5), (-56, 4), (-71, 7), (-84, 4), (-163, 1), (-5460, 16),
    ])
    def test_class_number_forms(self, d, h):
        """Counting reduced forms should give the class number."""
        from polya_groups.services.forms import class_number_forms, reduced_forms_definite

        assert class_number_forms(d) == h
        assert len(reduced_forms_definite(d)) == h

    @pytest.mark.parametrize("d", [-23, -47, -71, -84, -104, -5460])
    def test_analytic_agrees(self, field, d):
        """The character sum should agree with the form count."""
        from polya_groups.services.forms import class_number_analytic, class_number_forms

        assert class_number_analytic(field(d)) == class_number_forms(d)

    def test_analytic_rejects_small_and_real(self, field):
        """d in {-3, -4} and d > 0 should be out of range."""
        from polya_groups.errors import OutOfRange
        from polya_groups.services.forms import class_number_analytic, imaginary_class_number

        with pytest.raises(OutOfRange):
            class_number_analytic(field(-4))
        with pytest.raises(OutOfRange):
            class_number_analytic(field(5))
        assert imaginary_class_number(field(-3)) == 1

    def test_reduced_forms_indefinite(self):
        """d = 5 should have the two reduced forms (+-1, 1, -+1)."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import reduced_forms_indefinite

        assert reduced_forms_indefinite(5) == [QuadForm(a=-1, b=1, c=1), QuadForm(a=1, b=1, c=-1)]

    def test_wrong_sign_enumeration(self):
        """Definite enumerators should reject d > 0 and vice versa."""
        from polya_groups.errors import WrongSign
        from polya_groups.services.forms import class_number_forms, reduced_forms_indefinite

        with pytest.raises(WrongSign):
            class_number_forms(5)
        with pytest.raises(WrongSign):
            reduced_forms_indefinite(-20)


class TestComposition:
    """Test suite for compose and is_principal."""

    def test_compose_inverse(self):
        """A class times its inverse should be principal."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import compose

        assert compose(QuadForm(a=2, b=1, c=3), QuadForm(a=2, b=-1, c=3)) == QuadForm(a=1, b=1, c=6)

    def test_compose_order_three(self):
        """In Cl(-23) = Z/3 the square of a generator is its inverse."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import compose

        g = QuadForm(a=2, b=1, c=3)

        assert compose(g, g) == QuadForm(a=2, b=-1, c=3)

    def test_compose_mismatch(self):
        """Forms of different discriminants cannot be composed."""
        from polya_groups.errors import DiscriminantMismatch
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import compose

        with pytest.raises(DiscriminantMismatch):
            compose(QuadForm(a=2, b=1, c=3), QuadForm(a=1, b=0, c=5))

    def test_compose_is_associative_in_group(self, field):
        """Composition of canonical classes should be associative."""
        from polya_groups.services.forms import class_arithmetic

        ctx = class_arithmetic(field(-5460))
        elems = ctx.elements()

        for x in elems[:4]:
            for y in elems[:4]:
                for z in elems[:4]:
                    assert ctx.op(ctx.op(x, y), z) == ctx.op(x, ctx.op(y, z))

    def test_is_principal_definite(self):
        """(1, 0, 5) is principal, (2, 2, 3) is not."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import is_principal

        assert is_principal(QuadForm(a=5, b=0, c=1))
        assert not is_principal(QuadForm(a=2, b=2, c=3))

    def test_is_principal_indefinite(self):
        """(-1, 0, 3) is principal only in the wide sense for d = 12."""
        from polya_groups.models import QuadForm
        from polya_groups.services.forms import is_principal

        f = QuadForm(a=-1, b=0, c=3)

        assert not is_principal(f)
        assert is_principal(f, wide=True)
        assert is_principal(QuadForm(a=1, b=0, c=-3))
        assert not is_principal(QuadForm(a=2, b=0, c=-5))


class TestClassGroups:
    """Test suite for class_group_definite and class_group_real."""

    @pytest.mark.parametrize("d, divisors", [
        (-4, ()), (-23, (3,)), (-56, (4,)), (-84, (2, 2)), (-5460, (2, 2, 2, 2)),
    ])
    def test_definite(self, field, d, divisors):
        """Invariant factors of imaginary class groups."""
        from polya_groups.services.forms import class_group_definite

        group = class_group_definite(field(d))

        assert group.divisors == divisors
        assert group.discriminant == d
        assert len(group.dlog) == group.order

    def test_definite_rejects_real(self, field):
        """d > 0 should be out of range."""
        from polya_groups.errors import OutOfRange
        from polya_groups.services.forms import class_group_definite

        with pytest.raises(OutOfRange):
            class_group_definite(field(12))

    @pytest.mark.parametrize("d, narrow_h, wide_h", [
        (5, 1, 1), (8, 1, 1), (12, 2, 1), (40, 2, 2), (60, 4, 2),
    ])
    def test_real(self, field, d, narrow_h, wide_h):
        """Narrow and wide class numbers of real fields."""
        from polya_groups.services.forms import class_group_real

        narrow, wide = class_group_real(field(d))

        assert narrow.order == narrow_h
        assert wide.order == wide_h

    def test_real_rejects_wrong_norm(self, field):
        """A unit norm contradicting the -1 class should raise InvariantViolation."""
        from polya_groups.errors import InvariantViolation
        from polya_groups.services.forms import class_group_real

        with pytest.raises(InvariantViolation):
            class_group_real(field(12), unit_norm=-1)

    def test_negative_principal_class(self, field):
        """(-1, b0, -c0) should be trivial exactly when N(eps) = -1."""
        from polya_groups.services.forms import class_arithmetic, negative_principal_class

        for d, trivial in ((5, True), (8, True), (12, False), (60, False)):
            identity = class_arithmetic(field(d), narrow=True).identity
            assert (negative_principal_class(field(d)).as_tuple() == identity) is trivial

    def test_two_torsion_is_genus_count(self, field):
        """Cl(d)[2] should have 2^(s-1) elements for every imaginary |d| <= 1000."""
        from polya_groups.services.forms import class_group_definite
        from polya_groups.services.quadfield import fundamental_discriminants

        for d in fundamental_discriminants(-1000, -3):
            F = field(d)
            assert class_group_definite(F).two_torsion_count() == 2 ** (F.s - 1), d
