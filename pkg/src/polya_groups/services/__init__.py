"""
Mathematical services of polya-groups.

- quadfield: fundamental discriminants, ramified primes, ambiguous forms
- sieve: square-free sieves over the two unit families
- units: continued fractions, fundamental units, regulators
- forms: reduction, composition and class groups of binary quadratic forms
- polya: Polya groups and relative class groups of quadratic fields
- abelian: abelian fields, characters, discriminants, h^- of Q(zeta_p)

Import order follows the dependencies between the modules.
"""

from polya_groups.services.quadfield import (
    ambiguous_form,
    discriminant_of_radicand,
    fundamental_discriminants,
    is_fundamental,
    make_field,
)
from polya_groups.services.sieve import density_limit_estimate, residue_roots, sieve_family
from polya_groups.services.units import cf_sqrt, check_family, fundamental_unit, regulator_ratio
from polya_groups.services.forms import (
    class_group_definite,
    class_group_real,
    class_number_analytic,
    class_number_forms,
    compose,
    is_principal,
    reduce_definite,
)
from polya_groups.services.polya import (
    hilbert_order,
    polya_group,
    polya_order,
    polya_ratio,
    relative_class_group,
)
from polya_groups.services.abelian import (
    discriminant_from_exponents,
    discriminant_oracle,
    hminus_cyclotomic,
    make_abelian,
)

__all__ = [
    'ambiguous_form',
    'discriminant_of_radicand',
    'fundamental_discriminants',
    'is_fundamental',
    'make_field',
    'density_limit_estimate',
    'residue_roots',
    'sieve_family',
    'cf_sqrt',
    'check_family',
    'fundamental_unit',
    'regulator_ratio',
    'class_group_definite',
    'class_group_real',
    'class_number_analytic',
    'class_number_forms',
    'compose',
    'is_principal',
    'reduce_definite',
    'hilbert_order',
    'polya_group',
    'polya_order',
    'polya_ratio',
    'relative_class_group',
    'discriminant_from_exponents',
    'discriminant_oracle',
    'hminus_cyclotomic',
    'make_abelian',
]
