"""
Configuration management using Pydantic Settings.

Automatically loads the survey catalog from config/survey.yaml and runtime
settings from environment variables. Provides type-safe access to:
- Unit/sieve family tags and their descriptions
- Command descriptions and the documented CSV columns of every command
- Worker count, precision digits and output settings
"""

from pathlib import Path
from typing import Dict, Optional
import yaml
from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class CatalogConfig(BaseSettings):
    """
    Survey catalog automatically loaded from config/survey.yaml.

    Pydantic Settings handles validation; the YAML file is located by the
    `load_yaml_catalog` validator. This class provides type-safe access to:
    - Family tags (families)
    - Command descriptions (commands)
    - Ordered CSV column documentation per command (columns)

    Attributes:
        families: Dictionary of family tags to descriptions
        commands: Dictionary of command names to descriptions
        columns: Dictionary of command names to ordered column descriptions

    Example:
        >>> catalog = CatalogConfig()
        >>> catalog.is_valid_family('n2p1')
        True
        >>> list(catalog.get_columns('survey'))[:3]
        ['d', 'h', 's']
    """

    families: Dict[str, str] = Field(
        default_factory=dict,
        description="Valid family tags with descriptions"
    )
    commands: Dict[str, str] = Field(
        default_factory=dict,
        description="CLI commands with descriptions"
    )
    columns: Dict[str, Dict[str, str]] = Field(
        default_factory=dict,
        description="Ordered CSV column documentation per command"
    )

    model_config = SettingsConfigDict(
        extra='ignore'
    )

    @model_validator(mode='before')
    @classmethod
    def load_yaml_catalog(cls, data: dict) -> dict:
        """
        Load the catalog from config/survey.yaml if not already provided.

        Runs before field validation; explicit values (e.g. from tests)
        take precedence over the file.
        """
        if data:
            return data

        current_file = Path(__file__)
        project_root = current_file.parent.parent.parent  # src/polya_groups/config.py -> root
        config_path = project_root / 'config' / 'survey.yaml'

        if not config_path.exists():
            config_path = Path('config/survey.yaml')

        if not config_path.exists():
            raise FileNotFoundError(
                f"Catalog file not found at {config_path}. "
                f"Ensure config/survey.yaml exists in project root."
            )

        with open(config_path, 'r', encoding='utf-8') as f:
            yaml_data = yaml.safe_load(f)

        return {
            'families': yaml_data.get('families', {}),
            'commands': yaml_data.get('commands', {}),
            'columns': yaml_data.get('columns', {})
        }

    def is_valid_family(self, tag: Optional[str]) -> bool:
        """
        Check if a family tag is known.

        Args:
            tag: Family tag to validate (e.g., '4n2m1')

        Returns:
            True if the tag is listed in the catalog
        """
        if tag is None:
            return False
        return tag in self.families

    def get_family_description(self, tag: str) -> str:
        """
        Get the description of a family tag.

        Raises:
            KeyError: If the tag is not in the catalog
        """
        if tag not in self.families:
            raise KeyError(f"Unknown family: {tag}")
        return self.families[tag]

    def get_columns(self, command: str) -> Dict[str, str]:
        """
        Get the ordered column documentation of a command.

        Raises:
            KeyError: If the command has no column documentation
        """
        if command not in self.columns:
            raise KeyError(f"No columns documented for command: {command}")
        return self.columns[command]


# Singleton pattern - loaded once, cached forever
_catalog: Optional[CatalogConfig] = None


def get_catalog() -> CatalogConfig:
    """
    Get global catalog instance (lazy-loaded singleton).

    Example:
        >>> catalog = get_catalog()
        >>> catalog is get_catalog()
        True
    """
    global _catalog
    if _catalog is None:
        _catalog = CatalogConfig()
    return _catalog


class AppConfig(BaseSettings):
    """
    Runtime configuration loaded from environment variables.

    Environment Variables (from .env or the process environment):
        POLYA_WORKERS: worker processes for sweeps (e.g., "4")
        POLYA_PRECISION: decimal digits for regulators and h^- (e.g., "50")
        POLYA_FLOAT_DIGITS: significant digits of floats in tables
        POLYA_CROSS_CHECK_LIMIT: |d| bound for the analytic class-number check
        POLYA_FAMILY_CLASS_LIMIT: n bound for class data in family rows
        POLYA_LOG_LEVEL: logging level name

    Example:
        >>> config = get_app_config()
        >>> config.precision
        50
    """

    workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes used by range sweeps"
    )

    precision: int = Field(
        default=50,
        ge=15,
        description="Decimal digits for regulators and relative class numbers"
    )

    float_digits: int = Field(
        default=12,
        ge=6,
        le=17,
        description="Significant digits of floats in emitted tables"
    )

    cross_check_limit: int = Field(
        default=10_000,
        ge=0,
        description="Survey rows with |d| up to this bound are checked against the analytic class number"
    )

    family_class_limit: int = Field(
        default=200,
        ge=0,
        description="Family rows with n up to this bound also carry h, |Po| and |Cl/Po|"
    )

    log_level: str = Field(
        default="INFO",
        description="Logging level name for the CLI"
    )

    model_config = SettingsConfigDict(
        env_prefix='POLYA_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore'
    )


# Singleton pattern - loaded once, cached forever
_app_config: Optional[AppConfig] = None


def get_app_config() -> AppConfig:
    """
    Get global application config instance (lazy-loaded singleton).

    Example:
        >>> config = get_app_config()
        >>> config is get_app_config()
        True
    """
    global _app_config
    if _app_config is None:
        _app_config = AppConfig()
    return _app_config
