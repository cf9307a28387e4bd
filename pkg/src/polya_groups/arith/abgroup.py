"""
Structure of a finite abelian group given by an explicit element list.

Works on any hashable elements with a composition callable. Orders are
computed by repeated composition; each p-Sylow subgroup gets a basis by
repeatedly adjoining an element of maximal order modulo the span so far,
adjusted inside the span so its true order equals that relative order.
Basis elements are then merged into invariant factors d_1 | d_2 | ... | d_k.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Set, Tuple, TypeVar

from polya_groups.arith.intarith import factorize

T = TypeVar("T", bound=Hashable)

DLOG_LIMIT = 10**6


@dataclass(frozen=True)
class GroupStructure:
    """Invariant factors with one generator each, plus an optional discrete-log table."""

    divisors: Tuple[int, ...]
    generators: Tuple[Hashable, ...]
    dlog: Optional[Dict[Hashable, Tuple[int, ...]]]


def power(x: T, k: int, op: Callable[[T, T], T], identity: T) -> T:
    """x^k by square-and-multiply."""
    result = identity
    while k > 0:
        if k & 1:
            result = op(result, x)
        x = op(x, x)
        k >>= 1
    return result


def element_order(x: T, op: Callable[[T, T], T], identity: T, bound: int) -> int:
    """Smallest k >= 1 with x^k = identity (k <= bound)."""
    y, k = x, 1
    while y != identity:
        y = op(y, x)
        k += 1
        if k > bound:
            raise ArithmeticError(f"element order exceeds group order {bound}")
    return k


def closure(generators: Sequence[T], op: Callable[[T, T], T], identity: T) -> List[T]:
    """
    Subgroup generated by `generators`, breadth-first, in discovery order.
    """
    seen: Dict[T, None] = {identity: None}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = op(x, g)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def _extend(span: Set[T], y: T, k: int, op: Callable[[T, T], T]) -> Set[T]:
    out = set(span)
    layer = list(span)
    for _ in range(k - 1):
        layer = [op(h, y) for h in layer]
        out.update(layer)
    return out


def _relative_order(x: T, span: Set[T], p: int, op: Callable[[T, T], T], identity: T) -> int:
    k = 1
    y = x
    while y not in span:
        y = power(y, p, op, identity)
        k *= p
    return k


def _sylow_basis(
    sylow: List[T], p: int, op: Callable[[T, T], T], identity: T
) -> List[Tuple[T, int]]:
    span: Set[T] = {identity}
    basis: List[Tuple[T, int]] = []
    target = len(sylow)
    while len(span) < target:
        best, best_k = None, 1
        for x in sylow:
            if x in span:
                continue
            k = _relative_order(x, span, p, op, identity)
            if k > best_k:
                best, best_k = x, k
        adjusted = None
        for h in span:
            y = op(best, h)
            if power(y, best_k, op, identity) == identity:
                adjusted = y
                break
        if adjusted is None:
            raise ArithmeticError("no lift of maximal relative order found")
        basis.append((adjusted, best_k))
        span = _extend(span, adjusted, best_k, op)
    return basis


def abelian_structure(
    elements: Sequence[T],
    op: Callable[[T, T], T],
    identity: T,
    with_dlog: bool = True,
) -> GroupStructure:
    """
    Invariant factors, generators and discrete-log table of a finite abelian group.

    Args:
        elements: every element exactly once (identity included)
        op: group composition returning canonical representatives
        identity: neutral element
        with_dlog: build the exponent-vector table (only when order <= 10^6)

    Returns:
        GroupStructure with divisors ascending in a divisibility chain; the
        trivial group has no divisors and no generators.
    """
    n = len(elements)
    if n == 1:
        return GroupStructure(divisors=(), generators=(), dlog={identity: ()} if with_dlog else None)

    orders = {x: element_order(x, op, identity, n) for x in elements}
    per_prime: List[List[Tuple[T, int]]] = []
    for p, _ in factorize(n).pairs:
        sylow = [x for x, o in orders.items() if _is_power_of(o, p)]
        basis = _sylow_basis(sylow, p, op, identity)
        basis.sort(key=lambda item: item[1], reverse=True)
        per_prime.append(basis)

    rank = max(len(b) for b in per_prime)
    divisors: List[int] = []
    generators: List[T] = []
    for j in range(rank):
        g, d = identity, 1
        for basis in per_prime:
            if j < len(basis):
                g = op(g, basis[j][0])
                d *= basis[j][1]
        divisors.append(d)
        generators.append(g)
    divisors.reverse()
    generators.reverse()

    dlog = None
    if with_dlog and n <= DLOG_LIMIT:
        dlog = {identity: ()}
        for g, d in zip(generators, divisors):
            extended = {}
            for x, vec in dlog.items():
                y = x
                for e in range(d):
                    extended[y] = vec + (e,)
                    y = op(y, g)
            dlog = extended
        if len(dlog) != n:
            raise ArithmeticError(f"discrete-log table has {len(dlog)} entries, group has {n}")
    return GroupStructure(divisors=tuple(divisors), generators=tuple(generators), dlog=dlog)


def _is_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def quotient_structure(
    elements: Sequence[T],
    op: Callable[[T, T], T],
    identity: T,
    subgroup: Sequence[T],
    with_dlog: bool = True,
) -> GroupStructure:
    """
    Structure of G / S, each coset represented by its smallest element.

    Elements must be totally ordered (tuples or ints).

    Example:
        >>> quotient_structure(range(8), lambda x, y: (x + y) % 8, 0, [0, 4]).divisors
        (4,)
    """
    members = list(subgroup)

    def coset_rep(x: T) -> T:
        return min(op(x, s) for s in members)

    reps = sorted({coset_rep(x) for x in elements})
    if len(reps) * len(members) != len(elements):
        raise ArithmeticError(
            f"|G| = {len(elements)} is not |G/S| * |S| = {len(reps)} * {len(members)}"
        )
    return abelian_structure(reps, lambda x, y: coset_rep(op(x, y)), coset_rep(identity), with_dlog)
