"""Core utilities and configuration."""

from twopage.core.config import configure, get_settings
from twopage.core.logging import get_logger, setup_logging

__all__ = ["get_settings", "configure", "setup_logging", "get_logger"]
