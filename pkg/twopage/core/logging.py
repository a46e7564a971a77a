"""
Logging for long enumeration and search runs.

Everything goes to stderr; stdout carries only command results. Progress records
attach their numbers through ``extra=`` (n, k, classes, candidates, rounds, ...),
and both formatters render those fields: as trailing ``key=value`` pairs on
readable lines, or as top-level keys in JSON mode (``--json-logs``).
"""

import logging
import sys
from typing import Any

from pythonjsonlogger import jsonlogger

from twopage.core.config import get_settings

# Attributes every LogRecord has; anything else came in through extra=
_RECORD_ATTRS = frozenset(
    vars(logging.LogRecord("", logging.INFO, "", 0, "", None, None)).keys()
) | {"message", "asctime"}


def run_fields(record: logging.LogRecord) -> dict[str, Any]:
    """The extra= fields of a record, in insertion order."""
    return {key: value for key, value in vars(record).items() if key not in _RECORD_ATTRS}


class KeyValueFormatter(logging.Formatter):
    """Readable lines with the run fields appended, e.g. ``... Class found n=9 classes=4``."""

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        fields = run_fields(record)
        if not fields:
            return line
        return line + " " + " ".join(f"{key}={value}" for key, value in fields.items())


class CustomJsonFormatter(jsonlogger.JsonFormatter):
    """One JSON object per record; worker processes are told apart by ``process``."""

    def add_fields(
        self, log_record: dict[str, Any], record: logging.LogRecord, message_dict: dict[str, Any]
    ) -> None:
        super().add_fields(log_record, record, message_dict)

        log_record["app"] = get_settings().app_name
        log_record["level"] = record.levelname
        log_record["logger"] = record.name
        log_record["process"] = record.processName


def setup_logging() -> None:
    """
    Install a single stderr handler on the root logger.

    Called once by the CLI after the global options are applied, so a worker pool
    started later inherits the level. JSON output is selected by the production
    environment, which ``--json-logs`` turns on.
    """
    settings = get_settings()
    log_level = getattr(logging, settings.log_level)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)

    formatter: logging.Formatter
    if settings.is_production:
        formatter = CustomJsonFormatter(
            "%(timestamp)s %(level)s %(name)s %(message)s", timestamp=True
        )
    else:
        formatter = KeyValueFormatter(
            fmt="%(asctime)s %(levelname)-7s %(name)s: %(message)s", datefmt="%H:%M:%S"
        )

    handler.setFormatter(formatter)
    root_logger.addHandler(handler)

    root_logger.debug("Logging configured", extra={"json": settings.is_production})


def get_logger(name: str) -> logging.Logger:
    """Module logger, e.g. ``get_logger(__name__).info("Done", extra={"n": 9, "classes": 9})``."""
    return logging.getLogger(name)
