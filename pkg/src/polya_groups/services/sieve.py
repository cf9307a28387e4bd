"""
Square-free sieves over the families n^2 + 1 and 4n^2 - 1.

For every prime p with p^2 <= family_value(N) the n in [1, N] with
p^2 | family_value(n) lie in at most two residue classes mod p^2, so the
sieve marks strided numpy views instead of factoring each value. Every
excluded n carries the smallest such p as a witness.
"""

import logging
from typing import Dict, List

import numpy as np

from polya_groups.arith.intarith import factorize, isqrt, primes_up_to, sqrt_mod_prime
from polya_groups.errors import OutOfRange
from polya_groups.models.sieve import SieveReport
from polya_groups.validators import validate_family

logger = logging.getLogger(__name__)


def family_value(family: str, n: int) -> int:
    """
    n^2 + 1 (n2p1) or 4n^2 - 1 (4n2m1), exact.

    Example:
        >>> family_value('4n2m1', 3)
        35
    """
    validate_family(family)
    if family == 'n2p1':
        return n * n + 1
    return 4 * n * n - 1


def residue_roots(family: str, p: int) -> List[int]:
    """
    All x in [0, p^2) with family_value(x) = 0 mod p^2, ascending.

    No family value is divisible by 4, so p = 2 gives []. For 4n2m1 the
    roots are +-2^-1 mod p^2; for n2p1 a square root of -1 mod p is lifted
    once by Hensel's lemma (none when p = 3 mod 4).

    Example:
        >>> residue_roots('4n2m1', 3), residue_roots('n2p1', 5)
        ([4, 5], [7, 18])
    """
    validate_family(family)
    if p < 2:
        raise OutOfRange(f"residue_roots needs a prime, got {p}")
    if p == 2:
        return []
    p2 = p * p
    if family == '4n2m1':
        inv2 = (p2 + 1) // 2
        return sorted((inv2, p2 - inv2))
    r = sqrt_mod_prime(p - 1, p)
    if r is None:
        return []
    lifted = (r - (r * r + 1) * pow(2 * r, -1, p2)) % p2
    return sorted((lifted, p2 - lifted))


def sieve_family(family: str, N: int) -> SieveReport:
    """
    Exact S_N = {n <= N : family_value(n) square-free}.

    Args:
        family: 'n2p1' or '4n2m1'
        N: Upper bound (>= 1)

    Returns:
        SieveReport with the excluded n, their smallest witness primes and
        |S_{N,p}| for every prime that hits

    Raises:
        OutOfRange: If N < 1

    Example:
        >>> sieve_family('n2p1', 7).excluded
        ((7, 5),)
    """
    validate_family(family)
    if N < 1:
        raise OutOfRange(f"sieve bound must be >= 1, got {N}")

    witness = np.zeros(N + 1, dtype=np.int64)
    prime_counts: Dict[int, int] = {}
    for p in primes_up_to(isqrt(family_value(family, N))):
        p2 = p * p
        hits = 0
        for x in residue_roots(family, p):
            if x > N:
                continue
            block = witness[x::p2]
            hits += len(block)
            block[block == 0] = p
        if hits:
            prime_counts[p] = hits

    excluded = tuple((int(n), int(witness[n])) for n in np.flatnonzero(witness))
    report = SieveReport(
        family=family, bound=N, count=N - len(excluded),
        excluded=excluded, prime_counts=prime_counts,
    )
    logger.debug(f"sieve {family} N={N}: |S_N| = {report.count}, density {report.density:.6f}")
    return report


def density_limit_estimate(family: str, N: int) -> float:
    """
    Truncated product over p <= sqrt(N) of (1 - r_p / p^2).

    r_p is the number of residue roots mod p^2. With no prime in range
    the product is empty and the estimate is 1.

    Raises:
        OutOfRange: If N < 1
    """
    validate_family(family)
    if N < 1:
        raise OutOfRange(f"density estimate needs N >= 1, got {N}")
    estimate = 1.0
    for p in primes_up_to(isqrt(N)):
        estimate *= 1.0 - len(residue_roots(family, p)) / (p * p)
    return estimate


def brute_force_classify(family: str, N: int) -> SieveReport:
    """
    Same report as sieve_family, from a full factorization of every value.

    Slow; used to certify the sieve on small N.
    """
    validate_family(family)
    if N < 1:
        raise OutOfRange(f"bound must be >= 1, got {N}")
    excluded = []
    prime_counts: Dict[int, int] = {}
    for n in range(1, N + 1):
        squares = [p for p, e in factorize(family_value(family, n)).pairs if e >= 2]
        if squares:
            excluded.append((n, squares[0]))
        for p in squares:
            prime_counts[p] = prime_counts.get(p, 0) + 1
    return SieveReport(
        family=family, bound=N, count=N - len(excluded),
        excluded=tuple(excluded), prime_counts=dict(sorted(prime_counts.items())),
    )
