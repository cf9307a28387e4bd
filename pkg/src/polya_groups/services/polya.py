"""
Polya groups of quadratic fields.

Po(K) is the subgroup of the class group generated by the classes of the
ambiguous forms, one per ramified prime. It is enumerated by closure in the
same class arithmetic the class group uses, so |Po(K)| and the quotient
Cl(K)/Po(K) are exact.
"""

import logging
import math
from typing import List, Tuple

from polya_groups.arith.abgroup import abelian_structure, closure, quotient_structure
from polya_groups.arith.ramify import annihilation_exponent
from polya_groups.errors import InvariantViolation, OutOfRange
from polya_groups.models.forms import FormTuple, QuadForm
from polya_groups.models.polya import PolyaGroup, RelativeClassGroup
from polya_groups.models.quadfield import FundamentalDiscriminant
from polya_groups.services.forms import ClassArithmetic, class_arithmetic, to_abgroup
from polya_groups.services.quadfield import ambiguous_form

logger = logging.getLogger(__name__)

QUADRATIC_DEGREE = 2


def _ambiguous_classes(
    F: FundamentalDiscriminant, ctx: ClassArithmetic
) -> Tuple[Tuple[QuadForm, ...], List[FormTuple]]:
    """Ambiguous forms and their canonical classes; each class must die at the degree."""
    forms = tuple(ambiguous_form(F, p).form for p in F.ramified)
    classes = [ctx.canonical(f.as_tuple()) for f in forms]
    exponent = annihilation_exponent(QUADRATIC_DEGREE)
    for f, c in zip(forms, classes):
        x = ctx.identity
        for _ in range(exponent):
            x = ctx.op(x, c)
        if x != ctx.identity:
            logger.error(f"d = {F.d}: ambiguous class {f} does not vanish at exponent {exponent}")
            raise InvariantViolation(f"d = {F.d}: ambiguous class {f} raised to {exponent} is not principal")
    return forms, classes


def _context(F: FundamentalDiscriminant, narrow: bool) -> ClassArithmetic:
    if narrow and F.d < 0:
        raise OutOfRange(f"the narrow class group is only distinct for d > 0, got d = {F.d}")
    return class_arithmetic(F, narrow=narrow)


def polya_group(F: FundamentalDiscriminant, narrow: bool = False) -> PolyaGroup:
    """
    Po(K) as a subgroup of the (wide) class group.

    Args:
        F: Quadratic field
        narrow: Work in the narrow class group instead (d > 0 only)

    Raises:
        InvariantViolation: If an ambiguous class is not 2-torsion

    Example:
        >>> polya_group(make_field(-84)).order
        4
    """
    ctx = _context(F, narrow)
    forms, classes = _ambiguous_classes(F, ctx)
    members = closure(classes, ctx.op, ctx.identity)
    structure = abelian_structure(members, ctx.op, ctx.identity)
    group = to_abgroup(F.d, structure)
    logger.debug(f"Po({F.d}) = {group.structure} from {len(forms)} ambiguous forms")
    return PolyaGroup(field=F, generators=forms, group=group, order=len(members), narrow=narrow)


def polya_order(F: FundamentalDiscriminant) -> int:
    """|Po(K)| by closure only, without the group structure."""
    ctx = class_arithmetic(F)
    _, classes = _ambiguous_classes(F, ctx)
    return len(closure(classes, ctx.op, ctx.identity))


def hilbert_order(F: FundamentalDiscriminant) -> int:
    """
    2^(s-1) for an imaginary quadratic field with s ramified primes.

    Raises:
        OutOfRange: If d > 0

    Example:
        >>> hilbert_order(make_field(-5460))
        16
    """
    if F.d > 0:
        raise OutOfRange(f"Hilbert's order formula covers imaginary fields only, got d = {F.d}")
    return 2 ** (F.s - 1)


def relative_class_group(F: FundamentalDiscriminant, narrow: bool = False) -> RelativeClassGroup:
    """
    Cl(K)/Po(K) with exact order and invariant factors.

    Example:
        >>> rel = relative_class_group(make_field(-23))
        >>> rel.order, rel.group.structure
        (3, '[3]')
    """
    ctx = _context(F, narrow)
    _, classes = _ambiguous_classes(F, ctx)
    elements = ctx.elements()
    po = closure(classes, ctx.op, ctx.identity)
    structure = quotient_structure(elements, ctx.op, ctx.identity, po)
    return RelativeClassGroup(
        field=F,
        order=len(elements) // len(po),
        group=to_abgroup(F.d, structure),
        class_number=len(elements),
        po_order=len(po),
        narrow=narrow,
    )


def polya_ratio(F: FundamentalDiscriminant) -> float:
    """
    |Po(K)| / sqrt|d|.

    Example:
        >>> polya_ratio(make_field(-4))
        0.5
    """
    return polya_order(F) / math.sqrt(abs(F.d))


def is_polya_field(F: FundamentalDiscriminant) -> bool:
    """True iff Po(K) is trivial."""
    return polya_order(F) == 1
