"""
Abelian number fields as subgroups H of (Z/mZ)*.

A field is the fixed field of H inside Q(zeta_m), normalized on
construction to its conductor. Characters are exponent vectors over the
cyclic decomposition of (Z/mZ)* and are handled with exact integer
arithmetic; only the relative class numbers of prime cyclotomic fields go
through mpmath complex roots of unity.

Two independent discriminant computations are provided: the
conductor-exponent formula with its per-prime lambda and u terms, and the
product of the conductors of the characters of the field.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
import logging
from math import gcd, lcm, prod
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from mpmath import mp, mpf

from polya_groups.arith.abgroup import closure
from polya_groups.arith.intarith import euler_phi, factorize, is_prime, primitive_root
from polya_groups.config import get_app_config
from polya_groups.errors import (
    DiscriminantOne,
    InvariantViolation,
    NonIntegralDiscriminant,
    NotAUnit,
    OutOfRange,
    PrecisionLoss,
    PrimeNotInConductor,
)
from polya_groups.models.abelian import (
    AbelianField,
    DirichletCharacter,
    DiscriminantBreakdown,
    HMinusRow,
    PrimeDiscriminantEntry,
    UnitGroup,
)

logger = logging.getLogger(__name__)

LAMBDA_BOUND = 2
HMINUS_PRIME_LIMIT = 100
HMINUS_TOLERANCE = mpf("1e-6")


# ---------------------------------------------------------------------------
# (Z/mZ)*
# ---------------------------------------------------------------------------

def _local_generators(p: int, k: int) -> List[Tuple[int, int]]:
    """(generator mod p^k, order) pairs of the cyclic factors of (Z/p^kZ)*."""
    q = p ** k
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(q - 1, 2), (5, 2 ** (k - 2))]
    g = primitive_root(p)
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return [(g, q - q // p)]


@lru_cache(maxsize=512)
def unit_group(m: int) -> UnitGroup:
    """
    Cyclic decomposition of (Z/mZ)* lifted to global residues by CRT.

    Example:
        >>> G = unit_group(15)
        >>> G.orders, G.factor_primes
        ((2, 4), (3, 5))
    """
    if m < 1:
        raise OutOfRange(f"modulus must be >= 1, got {m}")
    generators: List[int] = []
    orders: List[int] = []
    primes: List[int] = []
    for p, k in factorize(m).pairs:
        q = p ** k
        rest = m // q
        for g, n in _local_generators(p, k):
            # g mod q, 1 mod m/q
            e = pow(rest, -1, q)
            lifted = (g * rest * e + 1 - rest * e) % m
            generators.append(lifted)
            orders.append(n)
            primes.append(p)

    dlog: Dict[int, Tuple[int, ...]] = {}
    for exps in product(*(range(n) for n in orders)):
        x = 1 % m
        for g, e in zip(generators, exps):
            x = x * pow(g, e, m) % m
        dlog[x] = exps
    if len(dlog) != euler_phi(m):
        raise InvariantViolation(f"decomposition of (Z/{m}Z)* covers {len(dlog)} of {euler_phi(m)} units")
    return UnitGroup(
        m=m, generators=tuple(generators), orders=tuple(orders),
        factor_primes=tuple(primes), dlog=dlog,
    )


def _units_congruent_to_one(m: int, f: int) -> List[int]:
    """Kernel of (Z/mZ)* -> (Z/fZ)* for f | m."""
    return [x for x in unit_group(m).dlog if x % f == 1 % f]


def _mul(m: int):
    return lambda x, y: x * y % m


def _span(m: int, elements: Iterable[int]) -> List[int]:
    """A small generating set of the subgroup formed by `elements`."""
    gens: List[int] = []
    span: Set[int] = {1 % m}
    for x in sorted(elements):
        if x not in span:
            gens.append(x)
            span = set(closure(gens, _mul(m), 1 % m))
    return gens


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

def _field_conductor(m: int, H: FrozenSet[int]) -> int:
    """Smallest f | m whose reduction kernel lies in H."""
    divisors = sorted({f for f in range(1, m + 1) if m % f == 0})
    for f in divisors:
        if all(x in H for x in _units_congruent_to_one(m, f)):
            return f
    return m


def make_abelian(m: int, generators: Sequence[int]) -> AbelianField:
    """
    Fixed field of H = <generators> in Q(zeta_m), normalized to its conductor.

    Args:
        m: Modulus (>= 1)
        generators: Residues generating H (empty for H = {1})

    Raises:
        NotAUnit: If a generator shares a factor with m

    Example:
        >>> K = make_abelian(8, [7])
        >>> K.m, K.degree, K.subgroup
        (8, 2, (1, 7))
        >>> make_abelian(6, []).m       # Q(zeta_6) = Q(zeta_3)
        3
    """
    if m < 1:
        raise OutOfRange(f"modulus must be >= 1, got {m}")
    for g in generators:
        if gcd(g, m) != 1:
            raise NotAUnit(f"{g} is not a unit mod {m} (gcd {gcd(g, m)}); generators of H must be coprime to m")
    gens = [g % m for g in generators]
    H = frozenset(closure(gens, _mul(m), 1 % m))
    degree = euler_phi(m) // len(H)

    f = _field_conductor(m, H)
    reduced_gens = tuple(g % f for g in gens)
    reduced = frozenset(x % f for x in H)
    if euler_phi(f) // len(reduced) != degree:
        raise InvariantViolation(f"normalizing m = {m} to conductor {f} changed the degree")
    if f != m:
        logger.debug(f"field H = {sorted(H)} mod {m} normalized to conductor {f}")
    return AbelianField(
        m=f, subgroup=tuple(sorted(reduced)), generators=reduced_gens,
        degree=degree, conductor=f,
    )


def cyclotomic_field(m: int) -> AbelianField:
    """Q(zeta_m), i.e. H = {1}."""
    return make_abelian(m, [])


def maximal_real_subfield(K: AbelianField) -> AbelianField:
    """K+ = fixed field of H.{+-1}."""
    return make_abelian(K.m, list(K.generators) + [K.m - 1])


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

def _local_conductor(p: int, k: int, exps: Sequence[int], orders: Sequence[int]) -> int:
    """p-part of the conductor of a character from its exponents on the p-factors."""
    if all(e == 0 for e in exps):
        return 1
    if p == 2:
        if k == 2 or exps[1] == 0:
            return 4
        n = orders[1]
        j = 3
        while (exps[1] * 2 ** (j - 2)) % n:
            j += 1
        return 2 ** j
    n = orders[0]
    j = 1
    while (exps[0] * (p - 1) * p ** (j - 1)) % n:
        j += 1
    return p ** j


def _character(G: UnitGroup, exps: Tuple[int, ...]) -> DirichletCharacter:
    conductor = 1
    for p, k in factorize(G.m).pairs:
        idx = [i for i, q in enumerate(G.factor_primes) if q == p]
        conductor *= _local_conductor(
            p, k, [exps[i] for i in idx], [G.orders[i] for i in idx]
        )
    parity = 1
    if G.m > 2:
        minus = G.dlog[G.m - 1]
        half = sum(Fraction(c * e, n) for c, e, n in zip(exps, minus, G.orders))
        parity = 1 if half.denominator == 1 else -1
    return DirichletCharacter(
        modulus=G.m, exponents=exps, orders=G.orders, conductor=conductor, parity=parity,
    )


def characters(K: AbelianField) -> Tuple[DirichletCharacter, ...]:
    """
    The [K:Q] characters of (Z/mZ)* trivial on H.

    Example:
        >>> [chi.conductor for chi in characters(make_abelian(5, []))]
        [1, 5, 5, 5]
    """
    G = unit_group(K.m)
    L = lcm(*G.orders) if G.orders else 1
    weights = [L // n for n in G.orders]
    h_logs = [G.dlog[h] for h in _span(K.m, K.subgroup)]

    found = []
    for exps in product(*(range(n) for n in G.orders)):
        if all(sum(c * e * w for c, e, w in zip(exps, v, weights)) % L == 0 for v in h_logs):
            found.append(_character(G, exps))
    if len(found) != K.degree:
        raise InvariantViolation(f"{K} has {len(found)} characters, expected {K.degree}")
    return tuple(found)


def discriminant_sign(K: AbelianField) -> int:
    """(-1)^r2: -1 iff K is imaginary with [K:Q]/2 odd."""
    if K.is_real:
        return 1
    return -1 if (K.degree // 2) % 2 else 1


def discriminant_oracle(K: AbelianField) -> int:
    """|d_K| as the product of the conductors of the characters of K."""
    return prod(chi.conductor for chi in characters(K))


# ---------------------------------------------------------------------------
# Conductor-exponent discriminant formula
# ---------------------------------------------------------------------------

def _valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def u_exponent(K: AbelianField, p: int) -> Fraction:
    """
    [K.Q(zeta_m') : Q(zeta_m')] / p^(alpha-1), m' = m / p^alpha.

    The degree is [K : K cap Q(zeta_m')] = |H.R| / |H| with R the kernel
    of (Z/mZ)* -> (Z/m'Z)*.

    Raises:
        PrimeNotInConductor: If p does not divide the conductor

    Example:
        >>> u_exponent(make_abelian(5, [4]), 5)
        Fraction(2, 1)
    """
    if p < 2 or K.conductor % p:
        raise PrimeNotInConductor(
            f"{p} does not divide the conductor {K.conductor}; "
            f"primes in the conductor: {list(factorize(K.conductor).primes)}"
        )
    alpha = _valuation(K.conductor, p)
    rest = K.m // p ** alpha
    R = _units_congruent_to_one(K.m, rest)
    HR = {h * r % K.m for h in K.subgroup for r in R}
    return Fraction(len(HR), len(K.subgroup) * p ** (alpha - 1))


def _lambda(p: int, alpha: int, u: Fraction) -> Fraction:
    q = p ** (alpha - gcd(p, 2))
    return (q - 1 + Fraction(p - 1) / u) / (q * (p - 1))


def discriminant_from_exponents(K: AbelianField) -> DiscriminantBreakdown:
    """
    |d_K| = (prod p^(alpha - lambda_p))^[K:Q] over the primes of the conductor.

    lambda_p = (p^(alpha-g) - 1 + (p-1)/u_p) / (p^(alpha-g) (p-1)) with
    g = gcd(p, 2), all in exact rationals.

    Raises:
        NonIntegralDiscriminant: If some (alpha - lambda_p) [K:Q] is not an integer

    Example:
        >>> bd = discriminant_from_exponents(make_abelian(5, [4]))
        >>> bd.abs_disc, bd.entries[0].lam
        (5, Fraction(1, 2))
    """
    if K.m != K.conductor:
        raise OutOfRange(f"field must be given at its conductor, got m = {K.m}, conductor {K.conductor}")
    entries = []
    for p, alpha in factorize(K.conductor).pairs:
        u = u_exponent(K, p)
        lam = _lambda(p, alpha, u)
        exponent = (alpha - lam) * K.degree
        if exponent.denominator != 1 or exponent < 0:
            raise NonIntegralDiscriminant(
                f"{K}: p = {p}, alpha = {alpha}, u = {u}, lambda = {lam} gives exponent {exponent}"
            )
        entries.append(PrimeDiscriminantEntry(p=p, alpha=alpha, u=u, lam=lam, exponent=int(exponent)))
    abs_disc = prod(e.p ** e.exponent for e in entries)
    return DiscriminantBreakdown(degree=K.degree, entries=tuple(entries), abs_disc=abs_disc)


def lambda_bound_check(K: AbelianField) -> bool:
    """True iff every lambda_p <= 2."""
    return discriminant_from_exponents(K).lambda_max <= LAMBDA_BOUND


def degree_over_logdisc(K: AbelianField) -> float:
    """
    [K:Q] / log|d_K|.

    Raises:
        DiscriminantOne: For K = Q
    """
    abs_disc = discriminant_from_exponents(K).abs_disc
    if abs_disc == 1:
        raise DiscriminantOne(f"{K} has |d_K| = 1")
    return float(K.degree / mp.log(abs_disc))


def cm_discriminant_ratio(K: AbelianField) -> int:
    """
    |d_K| / |d_K+|, exact.

    Example:
        >>> cm_discriminant_ratio(cyclotomic_field(7))     # 7^5 / 7^2
        343
    """
    d = discriminant_from_exponents(K).abs_disc
    d_plus = discriminant_from_exponents(maximal_real_subfield(K)).abs_disc
    if d % d_plus:
        raise InvariantViolation(f"|d_K+| = {d_plus} does not divide |d_K| = {d}")
    return d // d_plus


def polya_bound_ratio(K: AbelianField) -> float:
    """[K:Q]^l / sqrt|d_K| with l the number of primes dividing the conductor."""
    l = len(factorize(K.conductor).primes)
    abs_disc = discriminant_from_exponents(K).abs_disc
    return float(mpf(K.degree) ** l / mp.sqrt(abs_disc))


def regulator_ratio_constant(p: int) -> int:
    """R_K / R_K+ = 2^((p-1)/2 - 1) for K = Q(zeta_p) (unit index 1)."""
    if p < 3 or not is_prime(p):
        raise OutOfRange(f"expected an odd prime, got {p}")
    return 2 ** ((p - 1) // 2 - 1)


def enumerate_subfields(m: int) -> Tuple[AbelianField, ...]:
    """
    Every subfield of Q(zeta_m), each at its own conductor, sorted by key.

    Subgroups are the joins of cyclic subgroups of (Z/mZ)*.

    Example:
        >>> [K.degree for K in enumerate_subfields(5)]
        [1, 4, 2]
    """
    G = unit_group(m)
    units = sorted(G.dlog)
    one = 1 % m
    cyclic = {frozenset(closure([x], _mul(m), one)) for x in units}
    subgroups: Set[FrozenSet[int]] = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        fresh = []
        for A in frontier:
            for C in cyclic:
                if C <= A:
                    continue
                J = frozenset(a * c % m for a in A for c in C)
                if J not in subgroups:
                    subgroups.add(J)
                    fresh.append(J)
        frontier = fresh

    fields: Dict[Tuple[int, Tuple[int, ...]], AbelianField] = {}
    for H in subgroups:
        K = make_abelian(m, _span(m, H))
        fields.setdefault(K.key, K)
    logger.debug(f"Q(zeta_{m}): {len(subgroups)} subgroups, {len(fields)} subfields")
    return tuple(fields[k] for k in sorted(fields))


# ---------------------------------------------------------------------------
# Relative class numbers of Q(zeta_p)
# ---------------------------------------------------------------------------

def _hminus_value(p: int, digits: int) -> Tuple[int, mpf]:
    """Nearest integer to 2p prod_{chi odd} (-B_{1,chi}/2) and the rounding residue."""
    g = primitive_root(p)
    n = p - 1
    with mp.workdps(digits):
        roots = [mp.expjpi(mpf(2 * k) / n) for k in range(n)]
        index = [0] * p
        x = 1
        for k in range(n):
            index[x] = k
            x = x * g % p
        value = mp.mpc(2 * p)
        for j in range(1, n, 2):
            b1 = mp.fsum(roots[(j * index[a]) % n] * a for a in range(1, p)) / p
            value *= -b1 / 2
        nearest = int(mp.nint(value.real))
        residue = abs(value - nearest)
    return nearest, residue


def hminus_cyclotomic(p: int, precision: Optional[int] = None) -> int:
    """
    h^- of Q(zeta_p) for an odd prime p <= 100.

    Evaluated as 2p prod over odd characters of -B_{1,chi}/2 in mpmath
    complex arithmetic, rounded, and confirmed at twice the precision.

    Raises:
        OutOfRange: If p is not an odd prime <= 100
        PrecisionLoss: If the rounding residue stays >= 1e-6 after doubling
            the precision, or the two precisions round differently

    Example:
        >>> hminus_cyclotomic(23)
        3
    """
    if p < 3 or p > HMINUS_PRIME_LIMIT or not is_prime(p):
        raise OutOfRange(f"h^- is computed for odd primes p <= {HMINUS_PRIME_LIMIT}, got {p}")
    digits = precision or get_app_config().precision
    h, residue = _hminus_value(p, digits)
    if residue >= HMINUS_TOLERANCE:
        logger.warning(f"h^-({p}): rounding residue {mp.nstr(residue, 5)} at {digits} digits, doubling precision")
        digits *= 2
        h, residue = _hminus_value(p, digits)
        if residue >= HMINUS_TOLERANCE:
            raise PrecisionLoss(f"h^-({p}) residue {mp.nstr(residue, 5)} at {digits} digits")
    check, _ = _hminus_value(p, 2 * digits)
    if check != h or h < 1:
        raise PrecisionLoss(f"h^-({p}) = {h} at {digits} digits but {check} at {2 * digits}")
    logger.debug(f"h^-({p}) = {h}, residue {mp.nstr(residue, 5)}")
    return h


def hminus_ratio_table(p_list: Sequence[int], precision: Optional[int] = None) -> List[HMinusRow]:
    """
    (p, h^-, |d_K|, log h^- / log sqrt|d_K|) for K = Q(zeta_p), one row per prime.

    Example:
        >>> round(hminus_ratio_table([23])[0].ratio, 3)
        0.033
    """
    rows = []
    for p in p_list:
        h = hminus_cyclotomic(p, precision)
        abs_disc = discriminant_from_exponents(cyclotomic_field(p)).abs_disc
        ratio = float(mp.log(h) / mp.log(mp.sqrt(abs_disc)))
        rows.append(HMinusRow(p=p, h_minus=h, abs_disc=abs_disc, ratio=ratio))
    return rows
