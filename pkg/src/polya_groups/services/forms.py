"""
Class groups of quadratic fields via binary quadratic forms.

Forms travel as (a, b, c) tuples inside the hot loops and as QuadForm
models at the public surface. Definite forms are reduced to the unique
representative |b| <= a <= c; indefinite forms are reduced to cycle members
and a class is represented by the smallest tuple of its cycle. Proper
(SL2) equivalence gives the narrow group for d > 0; the wide group is the
narrow group modulo the class of (-1, b0, -c0).
"""

from dataclasses import dataclass, field
import logging
from math import gcd, prod
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from polya_groups.arith.abgroup import GroupStructure, abelian_structure, quotient_structure
from polya_groups.arith.intarith import factorize, isqrt, is_square, xgcd
from polya_groups.errors import (
    DiscriminantMismatch,
    InvariantViolation,
    NotPrimitive,
    OutOfRange,
    PerfectSquare,
    WrongSign,
)
from polya_groups.models.forms import AbGroup, FormTuple, QuadForm
from polya_groups.models.quadfield import FundamentalDiscriminant
from polya_groups.services.quadfield import character_table
from polya_groups.services.units import fundamental_unit

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Tuple-level primitives
# ---------------------------------------------------------------------------

def _check_primitive(f: FormTuple) -> None:
    if gcd(gcd(f[0], f[1]), f[2]) != 1:
        raise NotPrimitive(f"form {f} is not primitive (gcd of coefficients {gcd(gcd(f[0], f[1]), f[2])})")


def principal_tuple(d: int) -> FormTuple:
    """(1, 0, -d/4) for d = 0 mod 4, (1, 1, (1 - d)/4) for d = 1 mod 4."""
    if d % 4 == 0:
        return (1, 0, -d // 4)
    return (1, 1, (1 - d) // 4)


def _normalize_definite(a: int, b: int, c: int) -> FormTuple:
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def _reduce_definite(f: FormTuple) -> FormTuple:
    a, b, c = _normalize_definite(*f)
    while a > c:
        a, b, c = _normalize_definite(c, -b, a)
    if a == c and b < 0:
        b = -b
    return a, b, c


def _compose_raw(f: FormTuple, g: FormTuple, d: int) -> FormTuple:
    """
    Gauss composition of two primitive forms with positive leading coefficients.

    Result is unreduced; (a1 a2 / d1^2, b3, c3) with b3 = b_i mod 2a_i.
    """
    if f[0] > g[0]:
        f, g = g, f
    a1, b1, _ = f
    a2, b2, c2 = g
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, dd = 0, a1
    else:
        dd, u, _ = xgcd(a2, a1)
        y1 = u
    if s % dd == 0:
        y2, x2, d1 = -1, 0, dd
    else:
        d1, x2, y2 = xgcd(s, dd)
        y2 = -y2
    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - d) // (4 * a3)
    return a3, b3, c3


def _compose_definite(f: FormTuple, g: FormTuple, d: int) -> FormTuple:
    return _reduce_definite(_compose_raw(f, g, d))


def _is_reduced_indefinite(f: FormTuple, s: int) -> bool:
    a, b, _ = f
    return 0 < b <= s and s < 2 * abs(a) + b and 2 * abs(a) - b <= s


def _rho(f: FormTuple, d: int, s: int) -> FormTuple:
    """One reduction step (a, b, c) -> (c, r, (r^2 - d)/4c), r = -b mod 2c normalized."""
    _, b, c = f
    m = 2 * abs(c)
    if abs(c) > s:
        r = (-b) % m
        if r > abs(c):
            r -= m
    else:
        lo = s + 1 - m
        r = lo + ((-b - lo) % m)
    return c, r, (r * r - d) // (4 * c)


def _reduce_indefinite(f: FormTuple, d: int, s: int) -> FormTuple:
    while not _is_reduced_indefinite(f, s):
        f = _rho(f, d, s)
    return f


def _cycle(f: FormTuple, d: int, s: int) -> List[FormTuple]:
    cycle = [f]
    g = _rho(f, d, s)
    while g != f:
        cycle.append(g)
        g = _rho(g, d, s)
    return cycle


def _positive_leading(f: FormTuple) -> FormTuple:
    """Properly equivalent form with a > 0 (reduced forms have ac < 0)."""
    a, b, c = f
    return f if a > 0 else (c, -b, a)


# ---------------------------------------------------------------------------
# Class arithmetic contexts
# ---------------------------------------------------------------------------

@dataclass
class ClassArithmetic:
    """
    Composition and canonical representatives for one discriminant.

    `canonical` maps any primitive form of the discriminant to the chosen
    representative of its class; `op` composes canonical representatives.
    Elements of the whole group are enumerated lazily.
    """

    d: int
    identity: FormTuple
    canonical: Callable[[FormTuple], FormTuple]
    op: Callable[[FormTuple, FormTuple], FormTuple]
    enumerate_classes: Callable[[], List[FormTuple]]
    wide: bool = True
    _elements: Optional[List[FormTuple]] = field(default=None, repr=False)

    def elements(self) -> List[FormTuple]:
        if self._elements is None:
            self._elements = self.enumerate_classes()
        return self._elements


def class_arithmetic(F: FundamentalDiscriminant, narrow: bool = False) -> ClassArithmetic:
    """
    Class arithmetic of the field: the definite class group for d < 0, the
    wide (default) or narrow class group for d > 0.
    """
    d = F.d
    if d < 0:
        return ClassArithmetic(
            d=d,
            identity=principal_tuple(d),
            canonical=_reduce_definite,
            op=lambda f, g: _compose_definite(f, g, d),
            enumerate_classes=lambda: _reduced_definite_tuples(d),
        )

    s = isqrt(d)
    cache: Dict[FormTuple, FormTuple] = {}

    def narrow_canonical(f: FormTuple) -> FormTuple:
        g = _reduce_indefinite(f, d, s)
        hit = cache.get(g)
        if hit is None:
            cycle = _cycle(g, d, s)
            hit = min(cycle)
            for member in cycle:
                cache[member] = hit
        return hit

    def narrow_op(f: FormTuple, g: FormTuple) -> FormTuple:
        return narrow_canonical(_compose_raw(_positive_leading(f), _positive_leading(g), d))

    def narrow_classes() -> List[FormTuple]:
        return sorted({narrow_canonical(f) for f in _reduced_indefinite_tuples(d)})

    identity = narrow_canonical(principal_tuple(d))
    if narrow:
        return ClassArithmetic(
            d=d, identity=identity, canonical=narrow_canonical, op=narrow_op,
            enumerate_classes=narrow_classes, wide=False,
        )

    b0, c0 = principal_tuple(d)[1:]
    j_class = narrow_canonical((-1, b0, -c0))

    def wide_canonical(f: FormTuple) -> FormTuple:
        x = narrow_canonical(f)
        if j_class == identity:
            return x
        return min(x, narrow_op(x, j_class))

    def wide_op(f: FormTuple, g: FormTuple) -> FormTuple:
        return wide_canonical(narrow_op(f, g))

    def wide_classes() -> List[FormTuple]:
        return sorted({wide_canonical(f) for f in narrow_classes()})

    return ClassArithmetic(
        d=d, identity=wide_canonical(identity), canonical=wide_canonical, op=wide_op,
        enumerate_classes=wide_classes, wide=True,
    )


def negative_principal_class(F: FundamentalDiscriminant) -> QuadForm:
    """Narrow class of (-1, b0, -c0), the form representing -1 (d > 0)."""
    if F.d < 0:
        raise OutOfRange(f"the negative principal form is indefinite only, got d = {F.d}")
    ctx = class_arithmetic(F, narrow=True)
    b0, c0 = principal_tuple(F.d)[1:]
    return QuadForm.of(ctx.canonical((-1, b0, -c0)))


def to_abgroup(d: int, structure: GroupStructure) -> AbGroup:
    return AbGroup(
        discriminant=d,
        generators=tuple(QuadForm.of(g) for g in structure.generators),
        divisors=structure.divisors,
        order=prod(structure.divisors),
        dlog=structure.dlog,
    )


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def principal_form(d: int) -> QuadForm:
    """
    Principal form of discriminant d.

    Example:
        >>> principal_form(-20), principal_form(5)
        (QuadForm(a=1, b=0, c=5), QuadForm(a=1, b=1, c=-1))
    """
    if d % 4 not in (0, 1) or is_square(d):
        raise OutOfRange(f"{d} is not a non-square discriminant")
    return QuadForm.of(principal_tuple(d))


def reduce_definite(f: QuadForm) -> QuadForm:
    """
    Unique reduced representative of a positive definite primitive form.

    Raises:
        WrongSign: If d >= 0 or a <= 0
        NotPrimitive: If gcd(a, b, c) > 1

    Example:
        >>> reduce_definite(QuadForm(a=2, b=2, c=1))
        QuadForm(a=1, b=0, c=1)
    """
    t = f.as_tuple()
    if f.discriminant >= 0 or f.a <= 0:
        raise WrongSign(f"{f} is not positive definite (d = {f.discriminant}, a = {f.a})")
    _check_primitive(t)
    return QuadForm.of(_reduce_definite(t))


def reduce_indefinite(f: QuadForm) -> QuadForm:
    """
    A reduced form properly equivalent to an indefinite primitive form.

    Reduced: 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b.

    Raises:
        WrongSign: If d <= 0
        PerfectSquare: If d is a square
        NotPrimitive: If gcd(a, b, c) > 1
    """
    d = f.discriminant
    if d <= 0:
        raise WrongSign(f"{f} is not indefinite (d = {d})")
    if is_square(d):
        raise PerfectSquare(f"discriminant {d} of {f} is a perfect square")
    _check_primitive(f.as_tuple())
    return QuadForm.of(_reduce_indefinite(f.as_tuple(), d, isqrt(d)))


def indefinite_cycle(f: QuadForm) -> List[QuadForm]:
    """Reduction cycle of the reduced form of f, starting at it."""
    g = reduce_indefinite(f)
    d = g.discriminant
    return [QuadForm.of(t) for t in _cycle(g.as_tuple(), d, isqrt(d))]


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """
    Reduced representative of the product class.

    For d > 0 the result is the canonical narrow representative (smallest
    tuple of its reduction cycle).

    Raises:
        DiscriminantMismatch: If the discriminants differ
        NotPrimitive: If either form is not primitive

    Example:
        >>> compose(QuadForm(a=2, b=1, c=3), QuadForm(a=2, b=-1, c=3))
        QuadForm(a=1, b=1, c=6)
    """
    d = f.discriminant
    if g.discriminant != d:
        raise DiscriminantMismatch(f"cannot compose {f} (d = {d}) with {g} (d = {g.discriminant})")
    _check_primitive(f.as_tuple())
    _check_primitive(g.as_tuple())
    if d < 0:
        if f.a <= 0 or g.a <= 0:
            raise WrongSign(f"definite composition needs positive definite forms, got {f}, {g}")
        return QuadForm.of(_compose_definite(_reduce_definite(f.as_tuple()), _reduce_definite(g.as_tuple()), d))
    if is_square(d):
        raise PerfectSquare(f"discriminant {d} is a perfect square")
    s = isqrt(d)
    x = _positive_leading(_reduce_indefinite(f.as_tuple(), d, s))
    y = _positive_leading(_reduce_indefinite(g.as_tuple(), d, s))
    h = _reduce_indefinite(_compose_raw(x, y, d), d, s)
    return QuadForm.of(min(_cycle(h, d, s)))


def _reduced_definite_tuples(d: int) -> List[FormTuple]:
    forms = []
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
    return forms


def reduced_forms_definite(d: int) -> List[QuadForm]:
    """
    All reduced primitive forms of discriminant d < 0, ordered by (a, b).

    Example:
        >>> [str(f) for f in reduced_forms_definite(-23)]
        ['(1,1,6)', '(2,-1,3)', '(2,1,3)']
    """
    if d >= 0 or d % 4 not in (0, 1):
        raise WrongSign(f"definite discriminant expected, got {d}")
    return [QuadForm.of(t) for t in _reduced_definite_tuples(d)]


def class_number_forms(d: int) -> int:
    """
    Number of reduced primitive forms of discriminant d < 0.

    Iterates over b >= 0 and counts divisors a of (b^2 - d)/4 in [b, sqrt]
    with numpy, counting (a, +-b, c) twice unless b = 0, a = b or a = c.

    Example:
        >>> class_number_forms(-23), class_number_forms(-84)
        (3, 4)
    """
    if d >= 0 or d % 4 not in (0, 1):
        raise WrongSign(f"definite discriminant expected, got {d}")
    h = 0
    bmax = isqrt(-d // 3)
    for b in range(d % 2, bmax + 1, 2):
        n = (b * b - d) // 4
        top = isqrt(n)
        start = max(b, 1)
        if top < start:
            continue
        a = np.arange(start, top + 1, dtype=np.int64)
        a = a[n % a == 0]
        if a.size == 0:
            continue
        c = n // a
        primitive = np.gcd(np.gcd(a, b), c) == 1
        a, c = a[primitive], c[primitive]
        single = (b == 0) | (a == b) | (a == c)
        h += 2 * int(a.size) - int(np.count_nonzero(single))
    return h


def class_number_analytic(F: FundamentalDiscriminant) -> int:
    """
    h = -(1/|d|) * sum_{a=1}^{|d|-1} chi_d(a) * a for d < -4, exactly.

    Raises:
        OutOfRange: For d in {-3, -4} (w != 2) and for d > 0

    Example:
        >>> class_number_analytic(make_field(-23))
        3
    """
    d = F.d
    if d > 0:
        raise OutOfRange(f"analytic class number is for imaginary fields, got d = {d}")
    if d >= -4:
        raise OutOfRange(f"d = {d} has w = {F.roots_of_unity}; use imaginary_class_number")
    chi = character_table(F)
    total = int(np.dot(chi, np.arange(-d, dtype=np.int64)))
    if total % d:
        raise InvariantViolation(f"character sum {total} is not divisible by {d}")
    h = total // d
    if h < 1:
        raise InvariantViolation(f"analytic class number for d = {d} came out as {h}")
    return h


def imaginary_class_number(F: FundamentalDiscriminant) -> int:
    """Analytic class number with h = 1 for d in {-3, -4}."""
    if F.d in (-3, -4):
        return 1
    return class_number_analytic(F)


def class_group_definite(F: FundamentalDiscriminant) -> AbGroup:
    """
    Class group of an imaginary quadratic field.

    Example:
        >>> class_group_definite(make_field(-84)).divisors
        (2, 2)
    """
    if F.d > 0:
        raise OutOfRange(f"class_group_definite needs d < 0, got {F.d}")
    ctx = class_arithmetic(F)
    structure = abelian_structure(ctx.elements(), ctx.op, ctx.identity)
    logger.debug(f"Cl({F.d}) = {structure.divisors or '1'}")
    return to_abgroup(F.d, structure)


def _reduced_indefinite_tuples(d: int) -> List[FormTuple]:
    s = isqrt(d)
    forms = []
    for b in range(1, s + 1):
        if (b - d) % 2:
            continue
        n = (d - b * b) // 4
        if n == 0:
            continue
        for a in _divisors(n):
            c = -n // a
            for sa, sc in ((a, c), (-a, -c)):
                f = (sa, b, sc)
                if _is_reduced_indefinite(f, s) and gcd(gcd(a, b), c) == 1:
                    forms.append(f)
    return forms


def _divisors(n: int) -> List[int]:
    divs = [1]
    for p, e in factorize(n).pairs:
        divs = [q * p ** k for q in divs for k in range(e + 1)]
    return sorted(divs)


def reduced_forms_indefinite(d: int) -> List[QuadForm]:
    """All reduced primitive forms of discriminant d > 0 (non-square)."""
    if d <= 0:
        raise WrongSign(f"indefinite discriminant expected, got {d}")
    if is_square(d):
        raise PerfectSquare(f"discriminant {d} is a perfect square")
    return [QuadForm.of(t) for t in sorted(_reduced_indefinite_tuples(d))]


def class_group_real(F: FundamentalDiscriminant, unit_norm: Optional[int] = None) -> Tuple[AbGroup, AbGroup]:
    """
    (narrow, wide) class groups of a real quadratic field.

    The wide group is the narrow group modulo the class of (-1, b0, -c0),
    which is trivial exactly when the fundamental unit has norm -1; the two
    sides are cross-checked.

    Raises:
        InvariantViolation: If the -1 class disagrees with the unit norm

    Example:
        >>> narrow, wide = class_group_real(make_field(12))
        >>> narrow.order, wide.order
        (2, 1)
    """
    if F.d < 0:
        raise OutOfRange(f"class_group_real needs d > 0, got {F.d}")
    if unit_norm is None:
        unit_norm = fundamental_unit(F).norm

    narrow_ctx = class_arithmetic(F, narrow=True)
    narrow_elems = narrow_ctx.elements()
    narrow_structure = abelian_structure(narrow_elems, narrow_ctx.op, narrow_ctx.identity)

    b0, c0 = principal_tuple(F.d)[1:]
    j_class = narrow_ctx.canonical((-1, b0, -c0))
    j_trivial = j_class == narrow_ctx.identity
    if j_trivial != (unit_norm == -1):
        logger.error(f"d = {F.d}: class of (-1, b0, -c0) trivial = {j_trivial}, unit norm = {unit_norm}")
        raise InvariantViolation(
            f"d = {F.d}: negative principal class trivial = {j_trivial} but unit norm is {unit_norm}"
        )

    if j_trivial:
        wide_structure = narrow_structure
    else:
        wide_structure = quotient_structure(
            narrow_elems, narrow_ctx.op, narrow_ctx.identity, [narrow_ctx.identity, j_class]
        )
    logger.debug(f"Cl+({F.d}) = {narrow_structure.divisors or '1'}, Cl({F.d}) = {wide_structure.divisors or '1'}")
    return to_abgroup(F.d, narrow_structure), to_abgroup(F.d, wide_structure)


def is_principal(f: QuadForm, wide: bool = False) -> bool:
    """
    True iff f lies in the principal class.

    d < 0: reduce and compare with the principal form. d > 0: the reduction
    cycle of f is the principal cycle (narrow equivalence); with wide=True
    the cycle of (-1, b0, -c0) is accepted as well.

    Example:
        >>> is_principal(QuadForm(a=2, b=0, c=-5))
        False
    """
    d = f.discriminant
    _check_primitive(f.as_tuple())
    if d < 0:
        return reduce_definite(f).as_tuple() == principal_tuple(d)
    if is_square(d):
        raise PerfectSquare(f"discriminant {d} is a perfect square")
    s = isqrt(d)
    target = min(_cycle(_reduce_indefinite(f.as_tuple(), d, s), d, s))
    principal = min(_cycle(_reduce_indefinite(principal_tuple(d), d, s), d, s))
    if target == principal:
        return True
    if wide:
        b0, c0 = principal_tuple(d)[1:]
        negative = min(_cycle(_reduce_indefinite((-1, b0, -c0), d, s), d, s))
        return target == negative
    return False
