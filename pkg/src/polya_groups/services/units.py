"""
Fundamental units of real quadratic fields from continued fractions.

The unit is read off the convergents p/q of (P0 + sqrt(n))/Q0: sqrt(n)
for the ring Z[sqrt(n)] and (1 + sqrt(n))/2 when d = 1 mod 4, so
half-integral units are found directly. The first convergent with
x^2 - n y^2 = +-Q0^2 (x = Q0 p - P0 q, y = q) gives the fundamental unit.
Regulators are evaluated with mpmath at the configured precision and
rechecked at twice that precision.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from mpmath import mp, mpf
import numpy as np

from polya_groups.arith.intarith import is_square, isqrt
from polya_groups.config import get_app_config
from polya_groups.errors import NotSquarefree, OutOfRange, PerfectSquare, PrecisionLoss
from polya_groups.models.quadfield import FundamentalDiscriminant
from polya_groups.models.units import ContinuedFraction, FamilyCheck, FamilyOutcome, UnitData
from polya_groups.services.quadfield import discriminant_of_radicand
from polya_groups.services.sieve import family_value
from polya_groups.validators import validate_family

logger = logging.getLogger(__name__)

# Largest n*y^2 brute_force_unit scans with float square roots.
_EXACT_DOUBLE = 2 ** 52

# Family tag -> (x, y) of the candidate unit x + y*sqrt(value) at parameter n.
_FAMILY_UNITS = {
    'n2p1': lambda n: (n, 1),
    '4n2m1': lambda n: (2 * n, 1),
}


def _partial_quotients(n: int, p0: int, q0: int) -> Iterator[Tuple[int, Tuple[int, int]]]:
    """
    Partial quotients of (p0 + sqrt(n))/q0 with the state (P, Q) before each.

    Requires q0 > 0 dividing n - p0^2; every later Q stays positive.
    """
    r = isqrt(n)
    p, q = p0, q0
    while True:
        a = (p + r) // q
        yield a, (p, q)
        p = a * q - p
        q = (n - p * p) // q


def cf_sqrt(n: int) -> ContinuedFraction:
    """
    Continued fraction [a0; period] of sqrt(n).

    The period closes when the recurrence state (P, Q) returns to the state
    after the first step.

    Raises:
        PerfectSquare: If n is a perfect square
        OutOfRange: If n < 2

    Example:
        >>> str(cf_sqrt(3))
        '[1; (1, 2)]'
    """
    if n < 2:
        raise OutOfRange(f"cf_sqrt requires n > 1, got {n}")
    if is_square(n):
        raise PerfectSquare(f"{n} is a perfect square")
    quotients = _partial_quotients(n, 0, 1)
    a0, _ = next(quotients)
    period: List[int] = []
    first_state = None
    for a, state in quotients:
        if first_state is None:
            first_state = state
        elif state == first_state:
            break
        period.append(a)
    return ContinuedFraction(n=n, a0=a0, period=tuple(period))


def _regulator(x: int, y: int, n: int, sigma: int, digits: int) -> mpf:
    with mp.workdps(digits + 10):
        value = mp.log((mpf(x) + mpf(y) * mp.sqrt(n)) / sigma)
    with mp.workdps(digits):
        return +value


def regulator(x: int, y: int, n: int, sigma: int, digits: int) -> mpf:
    """
    log((x + y sqrt(n))/sigma) to `digits` significant digits.

    Raises:
        PrecisionLoss: If doubling the precision moves the value by more
            than 10^-(digits - 10)
    """
    r1 = _regulator(x, y, n, sigma, digits)
    r2 = _regulator(x, y, n, sigma, 2 * digits)
    with mp.workdps(2 * digits):
        drift = abs(r1 - r2)
        tolerance = mpf(10) ** (-(digits - 10))
    if drift >= tolerance:
        raise PrecisionLoss(f"regulator of ({x} + {y}*sqrt({n}))/{sigma} drifts by {drift} at {digits} digits")
    return r1


def _unit_from_convergents(n: int, p0: int, q0: int) -> Tuple[int, int, int]:
    target = q0 * q0
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for a, _ in _partial_quotients(n, p0, q0):
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        x, y = q0 * h - p0 * k, k
        if x > 0 and abs(x * x - n * y * y) == target:
            return x, y, q0


def fundamental_unit(F: FundamentalDiscriminant, precision: Optional[int] = None) -> UnitData:
    """
    Smallest unit > 1 of the maximal order of a real quadratic field.

    Args:
        F: Real quadratic field
        precision: Regulator digits (default from AppConfig)

    Raises:
        OutOfRange: If d < 0

    Example:
        >>> u = fundamental_unit(make_field(5))
        >>> (u.x, u.y, u.sigma, u.norm)
        (1, 1, 2, -1)
    """
    if F.d < 0:
        raise OutOfRange(f"fundamental_unit needs a real quadratic field, got d = {F.d}")
    digits = precision or get_app_config().precision
    n = F.radicand
    if n % 4 == 1:
        x, y, sigma = _unit_from_convergents(n, 1, 2)
        if x % 2 == 0 and y % 2 == 0:
            x, y, sigma = x // 2, y // 2, 1
    else:
        x, y, sigma = _unit_from_convergents(n, 0, 1)
    norm = (x * x - n * y * y) // (sigma * sigma)
    unit = UnitData(
        d=F.d, n=n, x=x, y=y, sigma=sigma, norm=norm,
        regulator=regulator(x, y, n, sigma, digits),
    )
    logger.debug(f"eps({F.d}) = {unit}, norm {norm}")
    return unit


def brute_force_unit(F: FundamentalDiscriminant, y_max: int) -> Optional[Tuple[int, int, int]]:
    """
    Smallest unit > 1 found by scanning y = 1..y_max, as (x, y, sigma).

    Looks for x^2 - n y^2 = +-1, or +-4 read as (x + y sqrt(n))/2 when
    n = 1 mod 4, so y counts halves there. y_max is capped where n y^2
    stops being exact in a double. Slow next to fundamental_unit; used to
    certify it.

    Returns:
        None if no unit has y <= y_max

    Example:
        >>> brute_force_unit(make_field(5), 10)
        (1, 1, 2)
    """
    if F.d < 0:
        raise OutOfRange(f"brute_force_unit needs a real quadratic field, got d = {F.d}")
    n = F.radicand
    k = 4 if n % 4 == 1 else 1
    y_max = min(y_max, isqrt(_EXACT_DOUBLE // n))
    ys = np.arange(1, y_max + 1, dtype=np.int64)
    base = n * ys * ys
    hits = np.zeros(ys.size, dtype=bool)
    # -k first: at n = 5 both (1 + sqrt 5)/2 and (3 + sqrt 5)/2 sit at y = 1
    for value in (base - k, base + k):
        root = np.rint(np.sqrt(value.astype(np.float64))).astype(np.int64)
        hits |= root * root == value
    found = np.flatnonzero(hits)
    if not found.size:
        return None
    y = int(ys[found[0]])
    x = isqrt(n * y * y - k) if is_square(n * y * y - k) else isqrt(n * y * y + k)
    if k == 4 and x % 2 == 0 and y % 2 == 0:
        return x // 2, y // 2, 1
    return x, y, 2 if k == 4 else 1


def family_radicand(family: str, n: int) -> int:
    """n^2 + 1 or 4n^2 - 1, the radicand of the family field."""
    validate_family(family)
    if n < 1:
        raise OutOfRange(f"family parameter must be >= 1, got {n}")
    return family_value(family, n)


def check_family(family: str, n: int, precision: Optional[int] = None) -> FamilyCheck:
    """
    Compare the family unit with the true fundamental unit.

    Skipped when the radicand is not square-free; otherwise holds iff the
    fundamental unit of Q(sqrt(radicand)) is n + sqrt(n^2+1) (n2p1) or
    2n + sqrt(4n^2-1) (4n2m1). Failures are logged with the true unit.

    Example:
        >>> check_family('n2p1', 2).outcome
        <FamilyOutcome.FAILS: 'fails'>
    """
    radicand = family_radicand(family, n)
    try:
        field = discriminant_of_radicand(radicand)
    except NotSquarefree:
        return FamilyCheck(family=family, n=n, radicand=radicand, outcome=FamilyOutcome.SKIPPED)
    unit = fundamental_unit(field, precision)
    x, y = _FAMILY_UNITS[family](n)
    if unit.equals(x, y):
        outcome = FamilyOutcome.HOLDS
    else:
        outcome = FamilyOutcome.FAILS
        logger.info(f"{family} n={n}: {x} + sqrt({radicand}) is not fundamental; eps = {unit}")
    return FamilyCheck(family=family, n=n, radicand=radicand, outcome=outcome, unit=unit)


def check_family_n2p1(n: int) -> FamilyOutcome:
    """Is n + sqrt(n^2+1) the fundamental unit of Q(sqrt(n^2+1))?"""
    return check_family('n2p1', n).outcome


def check_family_4n2m1(n: int) -> FamilyOutcome:
    """Is 2n + sqrt(4n^2-1) the fundamental unit of Q(sqrt(4n^2-1))?"""
    return check_family('4n2m1', n).outcome


def regulator_ratio(n: int, family: str, precision: Optional[int] = None) -> float:
    """
    log(R_K) / log(sqrt(|d_K|)) for the family field at n, from the true unit.

    Raises:
        NotSquarefree: If the family value is not square-free

    Example:
        >>> round(regulator_ratio(3, "n2p1"), 3)   # log(log(3+sqrt(10)))/log(sqrt(40))
        0.324
    """
    field = discriminant_of_radicand(family_radicand(family, n))
    return log_regulator_ratio(fundamental_unit(field, precision))


def log_regulator_ratio(unit: UnitData) -> float:
    """log(R) / log(sqrt(d)) for a computed unit."""
    with mp.workdps(mp.dps + 10):
        ratio = mp.log(unit.regulator) / mp.log(mp.sqrt(unit.d))
    return float(ratio)
