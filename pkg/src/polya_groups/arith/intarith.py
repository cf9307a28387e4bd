"""
Exact integer primitives consumed by every other module.

Primality (deterministic Miller-Rabin), factorization (trial division then
Pollard rho with Brent cycle detection), Kronecker symbol, integer square
roots, square-free tests and a few modular helpers. All functions are pure.
"""

from functools import lru_cache
import math
import logging
from typing import List, Optional, Tuple

import numpy as np

from polya_groups.errors import InputError
from polya_groups.models.factorization import Factorization

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic for n < 3.3 * 10^24, which covers 2^64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

# Strong-pseudoprime rounds above the deterministic bound: the first 40 primes.
_EXTENDED_BASES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173,
)


@lru_cache(maxsize=8)
def _prime_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return mask


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> Tuple[int, ...]:
    """
    Shared prime table: all primes <= limit, ascending.

    Example:
        >>> primes_up_to(20)
        (2, 3, 5, 7, 11, 13, 17, 19)
    """
    if limit < 2:
        return ()
    return tuple(int(p) for p in np.flatnonzero(_prime_mask(limit)))


def isqrt(n: int) -> int:
    """
    Floor of the real square root of n >= 0.

    Example:
        >>> isqrt(24), isqrt(25)
        (4, 5)
    """
    if n < 0:
        raise InputError(f"isqrt requires n >= 0, got {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
        if x == 1:
            return False
    return False


def is_prime(n: int) -> bool:
    """
    Primality test.

    Deterministic Miller-Rabin below 3.3 * 10^24 (so for every n < 2^64);
    above that, a strong-pseudoprime test to the first 40 prime bases.

    Example:
        >>> is_prime(2), is_prime(1), is_prime(15)
        (True, False, False)
    """
    if n < 0:
        raise InputError(f"is_prime requires n >= 0, got {n}")
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _DETERMINISTIC_BASES if n < _DETERMINISTIC_BOUND else _EXTENDED_BASES
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def _pollard_brent(n: int, c: int) -> Optional[int]:
    """One Brent-cycle Pollard rho run with polynomial x^2 + c; None on failure."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return None if g == n else g


def _split(n: int) -> int:
    """Nontrivial factor of an odd composite n."""
    for c in range(1, 1000):
        g = _pollard_brent(n, c)
        if g is not None:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def _factor_cofactor(n: int, out: List[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    if is_square(n):
        r = math.isqrt(n)
        _factor_cofactor(r, out)
        _factor_cofactor(r, out)
        return
    g = _split(n)
    _factor_cofactor(g, out)
    _factor_cofactor(n // g, out)


def factorize(n: int) -> Factorization:
    """
    Exact factorization of |n|.

    Trial division by the shared prime table up to 10^6, then Pollard rho
    (Brent) on the remaining cofactor.

    Raises:
        InputError: If n == 0

    Example:
        >>> factorize(-20).as_dict()
        {2: 2, 5: 1}
        >>> factorize(1).pairs
        ()
    """
    if n == 0:
        raise InputError("factorize requires a nonzero integer, got 0")
    n = abs(n)
    pairs: List[Tuple[int, int]] = []
    for p in primes_up_to(TRIAL_DIVISION_LIMIT):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    if n > 1:
        if n <= TRIAL_DIVISION_LIMIT ** 2 or is_prime(n):
            pairs.append((n, 1))
        else:
            logger.debug(f"Pollard rho on cofactor {n}")
            large: List[int] = []
            _factor_cofactor(n, large)
            for p in sorted(set(large)):
                pairs.append((p, large.count(p)))
    return Factorization(pairs=tuple(pairs))


def is_squarefree(n: int) -> bool:
    """
    True iff no prime square divides |n|.

    Raises:
        InputError: If n == 0

    Example:
        >>> is_squarefree(483), is_squarefree(20)
        (True, False)
    """
    if n == 0:
        raise InputError("is_squarefree requires a nonzero integer, got 0")
    return factorize(n).is_squarefree


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise InputError(f"Jacobi symbol requires odd n > 0, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """
    Kronecker symbol (a|n) with the standard conventions at 0, -1 and 2.

    (a|0) = 1 if a = +-1 else 0; (a|-1) = -1 if a < 0 else 1;
    (a|2) = 0 for a even, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.

    Example:
        >>> kronecker(-20, 7), kronecker(-4, 5), kronecker(-20, 5)
        (1, 1, 0)
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(a, n)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def sqrt_mod_prime(a: int, p: int) -> Optional[int]:
    """
    A square root of a modulo an odd prime p (Tonelli-Shanks), or None.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        return pow(a, (p + 1) // 4, p)
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1."""
    if n < 1:
        raise InputError(f"euler_phi requires n >= 1, got {n}")
    result = n
    for p in factorize(n).primes:
        result -= result // p
    return result


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime power base p (p prime)."""
    if not is_prime(p):
        raise InputError(f"primitive_root requires a prime, got {p}")
    if p == 2:
        return 1
    order_factors = factorize(p - 1).primes
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in order_factors):
            return g
    raise ArithmeticError(f"no primitive root found modulo {p}")
