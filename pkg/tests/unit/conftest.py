"""
Pytest configuration for unit tests.

Provides fixtures that apply to all unit tests.
"""

import pytest


@pytest.fixture(autouse=True, scope="function")
def reset_config_singletons(monkeypatch):
    """
    Drop the cached AppConfig before and after every test.

    Tests that set POLYA_* variables with monkeypatch get a fresh config;
    the catalog is read-only and stays cached.
    """
    import polya_groups.config as config

    for name in ('POLYA_WORKERS', 'POLYA_PRECISION', 'POLYA_FLOAT_DIGITS',
                 'POLYA_CROSS_CHECK_LIMIT', 'POLYA_FAMILY_CLASS_LIMIT', 'POLYA_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    config._app_config = None
    yield
    config._app_config = None


@pytest.fixture
def field():
    """Factory: fundamental discriminant -> FundamentalDiscriminant."""
    from polya_groups.services.quadfield import make_field

    return make_field
