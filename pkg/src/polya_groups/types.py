"""
Discovery helper classes for exploring the survey catalog.

Provides user-facing APIs to discover the unit/sieve families, the CLI
commands and the documented CSV columns of each command from
config/survey.yaml.
"""

from typing import Dict, List

from polya_groups.config import get_catalog


class Families:
    """
    Helper class for discovering the polynomial families.

    Example:
        >>> Families.list_available()
        {'n2p1': 'n^2+1 family, ...', '4n2m1': '4n^2-1 family, ...'}
        >>> Families.is_valid('4n2m1')
        True
    """

    @staticmethod
    def list_available() -> Dict[str, str]:
        """
        List all family tags with descriptions.

        Returns:
            A copy of the tag -> description mapping
        """
        return get_catalog().families.copy()

    @staticmethod
    def get_description(tag: str) -> str:
        """
        Get the description of a family tag.

        Raises:
            ValueError: If the tag is not found
        """
        try:
            return get_catalog().get_family_description(tag)
        except KeyError as e:
            raise ValueError(f"Unknown family: {tag}") from e

    @staticmethod
    def is_valid(tag: str) -> bool:
        return get_catalog().is_valid_family(tag)


class Commands:
    """
    Helper class for discovering CLI commands and their table columns.

    Example:
        >>> Commands.columns('sieve')
        ['n', 'family_value', 'squarefree', 'witness_p']
    """

    @staticmethod
    def list_available() -> Dict[str, str]:
        """List all commands with descriptions (copy)."""
        return get_catalog().commands.copy()

    @staticmethod
    def columns(command: str) -> List[str]:
        """
        Ordered column names emitted by a command.

        Raises:
            ValueError: If the command documents no columns
        """
        try:
            return list(get_catalog().get_columns(command))
        except KeyError as e:
            raise ValueError(f"Unknown command: {command}") from e

    @staticmethod
    def describe_columns(command: str) -> str:
        """
        Column documentation as an aligned text block (used in --help epilogs).

        Example:
            >>> print(Commands.describe_columns('sieve'))
            columns:
              n             family parameter
              ...
        """
        cols = get_catalog().get_columns(command)
        width = max(len(c) for c in cols) + 2
        lines = ["columns:"]
        lines.extend(f"  {name.ljust(width)}{text}" for name, text in cols.items())
        return "\n".join(lines)
