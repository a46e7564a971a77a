"""Command-line interface."""

from twopage.cli.main import cli, main

__all__ = ["cli", "main"]
