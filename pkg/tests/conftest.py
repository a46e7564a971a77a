"""Shared pytest configuration."""

import pytest

from twopage.core.config import configure


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from default settings."""
    configure()
    yield
    configure()
