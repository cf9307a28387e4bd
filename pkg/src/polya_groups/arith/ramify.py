"""
Ramification-index identities behind the compositum arguments for Polya
groups: Abhyankar's lcm rule, the Bezout combination of ambiguous ideals,
the annihilation exponent and the prime-support check on Po orders.
"""

from math import lcm
from typing import Optional, Tuple

from polya_groups.arith.intarith import factorize, xgcd
from polya_groups.errors import NotCoprime, OutOfRange
from polya_groups.models.quadfield import FundamentalDiscriminant
from polya_groups.models.ramify import RamificationScenario


def abhyankar_index(sc: RamificationScenario) -> Optional[int]:
    """
    Ramification index of p in the compositum by Abhyankar's lemma.

    Returns:
        lcm(e1, e2) when p is tame on at least one side, None when the
        hypothesis fails on both sides.

    Example:
        >>> abhyankar_index(RamificationScenario(e1=4, e2=6, p=5))
        12
        >>> abhyankar_index(RamificationScenario(e1=2, e2=2, p=2)) is None
        True
    """
    if not (sc.tame1 or sc.tame2):
        return None
    return lcm(sc.e1, sc.e2)


def bezout_exponents(e1: int, e2: int, m: Optional[int] = None) -> Tuple[int, int]:
    """
    (u, v) with u*(m/e1) + v*(m/e2) = 1 and |u| minimal.

    Ties in |u| go to the positive u. m defaults to lcm(e1, e2).

    Raises:
        OutOfRange: If e1, e2 < 1 or m is not a common multiple
        NotCoprime: If gcd(m/e1, m/e2) > 1

    Example:
        >>> bezout_exponents(2, 3)
        (1, -1)
        >>> bezout_exponents(1, 7, 7)
        (0, 1)
    """
    if e1 < 1 or e2 < 1:
        raise OutOfRange(f"ramification indices must be >= 1, got ({e1}, {e2})")
    if m is None:
        m = lcm(e1, e2)
    if m % e1 or m % e2:
        raise OutOfRange(f"m = {m} is not a common multiple of {e1} and {e2}")
    a, b = m // e1, m // e2
    g, u0, _ = xgcd(a, b)
    if g != 1:
        raise NotCoprime(f"m/e1 = {a} and m/e2 = {b} share the factor {g}")
    u = u0 % b
    if b - u < u:
        u -= b
    v = (1 - u * a) // b
    return u, v


def annihilation_exponent(degree: int) -> int:
    """
    Exponent killing every ambiguous class of a Galois field of this degree.

    Each ambiguous ideal raised to its ramification index is principal and
    the index divides the degree, so the degree annihilates Po(K).

    Raises:
        OutOfRange: If degree < 1
    """
    if degree < 1:
        raise OutOfRange(f"degree must be >= 1, got {degree}")
    return degree


def coprime_splitting_orders(o1: int, o2: int, d1: int, d2: int) -> bool:
    """
    Prime-support check: every prime of o_i divides d_i.

    When it holds, gcd(d1, d2) = 1 forces gcd(o1, o2) = 1.

    Example:
        >>> coprime_splitting_orders(4, 9, 2, 3)
        True
        >>> coprime_splitting_orders(6, 1, 2, 1)
        False
    """
    for o, d in ((o1, d1), (o2, d2)):
        if o < 1 or d < 1:
            raise OutOfRange(f"orders and degrees must be >= 1, got o={o}, d={d}")
        if any(d % p for p in factorize(o).primes):
            return False
    return True


def quadratic_scenario(F1: FundamentalDiscriminant, F2: FundamentalDiscriminant, p: int) -> RamificationScenario:
    """
    Scenario of p in two quadratic fields (index 2 where ramified, else 1).

    Example:
        >>> sc = quadratic_scenario(make_field(-4), make_field(5), 2)
        >>> sc.e1, sc.e2
        (2, 1)
    """
    return RamificationScenario(e1=F1.ramification_index(p), e2=F2.ramification_index(p), p=p)
