"""
Reusable field validators for Pydantic models.

These validators work with config/survey.yaml and the integer primitives and
can be used with the Pydantic @field_validator decorator. Each raises a
subclass of InputError (itself a ValueError), so inside a model they surface
as a ValidationError and outside a model as the named condition.
"""

from typing import Optional

from polya_groups.arith import intarith
from polya_groups.config import get_catalog
from polya_groups.errors import InputError, NotFundamental, NotSquarefree, OutOfRange


def is_fundamental_discriminant(d: int) -> bool:
    """
    True iff d is the discriminant of a quadratic field.

    d = 1 mod 4 and squarefree, or d = 4m with m = 2, 3 mod 4 and m squarefree;
    0 and 1 are excluded.

    Example:
        >>> is_fundamental_discriminant(-20), is_fundamental_discriminant(45)
        (True, False)
    """
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return intarith.is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and intarith.is_squarefree(m)
    return False


def validate_fundamental_discriminant(d: int) -> int:
    """
    Validate a fundamental discriminant.

    Args:
        d: Candidate discriminant (e.g., -20, 5, 40)

    Returns:
        The validated discriminant (unchanged if valid)

    Raises:
        NotFundamental: If d fails the congruence or square-free conditions

    Example:
        >>> validate_fundamental_discriminant(-23)
        -23
        >>> validate_fundamental_discriminant(12)
        12
    """
    if not is_fundamental_discriminant(d):
        raise NotFundamental(
            f"{d} is not a fundamental discriminant\n"
            f"Expected d = 1 mod 4 square-free, or d = 4m with m = 2, 3 mod 4 square-free "
            f"(d != 0, 1). Use discriminant_of_radicand() to build one from a radicand."
        )
    return d


def validate_squarefree(n: int) -> int:
    """
    Validate that n is a nonzero square-free integer.

    Raises:
        NotSquarefree: If n == 0 or a prime square divides n
    """
    if n == 0 or not intarith.is_squarefree(n):
        raise NotSquarefree(f"{n} is not square-free: factorization {intarith.factorize(n) if n else 0}")
    return n


def validate_family(tag: str) -> str:
    """
    Validate a family tag against config/survey.yaml.

    Args:
        tag: Family tag (e.g., '4n2m1')

    Returns:
        The validated tag

    Raises:
        InputError: If the tag is not in the catalog, listing valid tags

    Example:
        >>> validate_family('n2p1')
        'n2p1'
    """
    catalog = get_catalog()
    if not catalog.is_valid_family(tag):
        raise InputError(
            f"Invalid family: {tag!r}\n"
            f"Valid families: {sorted(catalog.families)}\n"
            f"Use Families.list_available() to see descriptions."
        )
    return tag


def validate_positive(n: int) -> int:
    """
    Validate n >= 1.

    Raises:
        OutOfRange: If n < 1
    """
    if n < 1:
        raise OutOfRange(f"Expected a positive integer, got {n}")
    return n


def validate_optional_positive(n: Optional[int]) -> Optional[int]:
    """Like validate_positive but lets None through."""
    if n is None:
        return n
    return validate_positive(n)


def validate_output_format(fmt: str) -> str:
    """
    Validate a table output format.

    Raises:
        InputError: If fmt is not 'csv' or 'json'
    """
    if fmt not in ('csv', 'json'):
        raise InputError(f"Invalid output format: {fmt!r}. Valid formats: ['csv', 'json']")
    return fmt
