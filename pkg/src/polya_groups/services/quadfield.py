"""
Quadratic field service: validated fundamental discriminants, ramified
primes, canonical ambiguous forms and the Kronecker character table.
"""

import logging
from typing import List

import numpy as np

from polya_groups.arith.intarith import factorize, isqrt, primes_up_to
from polya_groups.errors import DiscriminantOne, NotFundamental, NotRamified
from polya_groups.models.forms import QuadForm
from polya_groups.models.quadfield import AmbiguousPrimeData, FundamentalDiscriminant
from polya_groups.validators import is_fundamental_discriminant, validate_squarefree

logger = logging.getLogger(__name__)

# chi_q(a) for a mod 4 or 8, q the even prime discriminants.
_EVEN_PRIME_CHARACTERS = {
    -4: np.array([0, 1, 0, -1], dtype=np.int64),
    8: np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int64),
    -8: np.array([0, 1, 0, 1, 0, -1, 0, -1], dtype=np.int64),
}


def is_fundamental(d: int) -> bool:
    """True iff d is a fundamental discriminant (d != 0, 1)."""
    return is_fundamental_discriminant(d)


def make_field(d: int) -> FundamentalDiscriminant:
    """
    Validate d and attach its ramified primes.

    Raises:
        NotFundamental: If d fails the congruence or square-free conditions

    Example:
        >>> F = make_field(-20)
        >>> F.ramified, F.s
        ((2, 5), 2)
    """
    if not is_fundamental_discriminant(d):
        raise NotFundamental(
            f"{d} is not a fundamental discriminant "
            f"(need d = 1 mod 4 square-free, or 4m with m = 2, 3 mod 4 square-free)"
        )
    return FundamentalDiscriminant(d=d, ramified=factorize(d).primes)


def discriminant_of_radicand(n: int) -> FundamentalDiscriminant:
    """
    Field discriminant of Q(sqrt(n)): n if n = 1 mod 4, else 4n.

    Raises:
        NotSquarefree: If n is 0 or not square-free
        DiscriminantOne: If n == 1

    Example:
        >>> discriminant_of_radicand(-5).d
        -20
    """
    if n == 1:
        raise DiscriminantOne("radicand 1 gives the rational field")
    validate_squarefree(n)
    return make_field(n if n % 4 == 1 else 4 * n)


def ambiguous_form(F: FundamentalDiscriminant, p: int) -> AmbiguousPrimeData:
    """
    Canonical form (p, b, c) of discriminant d attached to a ramified prime.

    d odd: (p, p, (p^2 - d)/4p); d even, p odd: (p, 0, -d/4p);
    p = 2 with d/4 = 2 mod 4: (2, 0, -d/8); p = 2 with d/4 = 3 mod 4:
    (2, 2, (4 - d)/8).

    Raises:
        NotRamified: If p does not divide d

    Example:
        >>> ambiguous_form(make_field(-20), 2).form
        QuadForm(a=2, b=2, c=3)
    """
    d = F.d
    if p not in F.ramified:
        raise NotRamified(f"{p} is not ramified in {F}; ramified primes: {list(F.ramified)}")
    if d % 2:
        form = (p, p, (p * p - d) // (4 * p))
    elif p != 2:
        form = (p, 0, -d // (4 * p))
    elif (d // 4) % 4 == 2:
        form = (2, 0, -d // 8)
    else:
        form = (2, 2, (4 - d) // 8)
    f = QuadForm.of(form)
    if f.discriminant != d:
        raise ArithmeticError(f"ambiguous form {f} has discriminant {f.discriminant}, expected {d}")
    return AmbiguousPrimeData(p=p, form=f)


def fundamental_discriminants(lo: int, hi: int) -> List[int]:
    """
    All fundamental discriminants d with lo <= d <= hi, ascending.

    Square-freeness comes from one shared numpy sieve over |d| <= max(|lo|, |hi|).

    Example:
        >>> fundamental_discriminants(-24, -3)
        [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]
    """
    if lo > hi:
        return []
    top = max(abs(lo), abs(hi), 1)
    squarefree = np.ones(top + 1, dtype=bool)
    squarefree[0] = False
    for p in primes_up_to(isqrt(top)):
        squarefree[p * p::p * p] = False

    d = np.arange(lo, hi + 1, dtype=np.int64)
    absd = np.abs(d)
    odd = (d % 4 == 1) & squarefree[absd]
    m = d // 4
    even = (d % 4 == 0) & np.isin(m % 4, (2, 3)) & squarefree[np.abs(m)]
    keep = (odd | even) & (d != 0) & (d != 1)
    result = [int(x) for x in d[keep]]
    logger.debug(f"{len(result)} fundamental discriminants in [{lo}, {hi}]")
    return result


def character_table(F: FundamentalDiscriminant) -> np.ndarray:
    """
    chi_d(a) = kronecker(d, a) for a = 0 .. |d| - 1.

    Built as the product of the prime-discriminant characters of d:
    Legendre tables for the odd primes and a mod-4 or mod-8 table for the
    even part.

    Example:
        >>> character_table(make_field(-23))[:6].tolist()
        [0, 1, 1, 1, 1, -1]
    """
    d = F.d
    n = abs(d)
    a = np.arange(n, dtype=np.int64)
    chi = np.ones(n, dtype=np.int64)
    rest = d
    for p in F.ramified:
        if p == 2:
            continue
        residues = np.zeros(p, dtype=bool)
        residues[(np.arange(1, p, dtype=np.int64) ** 2) % p] = True
        legendre = np.where(residues, 1, -1).astype(np.int64)
        legendre[0] = 0
        chi *= legendre[a % p]
        rest //= p if p % 4 == 1 else -p
    if rest != 1:
        if rest not in _EVEN_PRIME_CHARACTERS:
            raise ArithmeticError(f"{d} does not split into prime discriminants (even part {rest})")
        table = _EVEN_PRIME_CHARACTERS[rest]
        chi *= table[a % len(table)]
    return chi
