"""
Structured Logging Configuration

One JSON object per event, written to stderr so that reports on stdout stay
byte-stable. Library modules raise; the harness and the CLI log.
"""

import json
import logging
from datetime import datetime, timezone
from typing import Optional


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class StructuredLogger:
    """
    JSON-structured logger for verification runs.

    Events carry words, verdicts and timings; never algebra contents.
    """

    def __init__(self, name: str, level: int = logging.INFO):
        """
        Args:
            name: Logger name (usually the CLI name)
            level: Logging level
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)
        if not self.logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(JsonFormatter())
            self.logger.addHandler(handler)
        self.logger.propagate = False

    def log_sweep_start(self, max_n: int, words: int):
        """Log start of a sweep over all words up to max_n vertices."""
        self.logger.info(json.dumps({
            "event": "sweep_start",
            "max_n": max_n,
            "words": words,
            "timestamp": _now(),
        }))

    def log_word_complete(self, word: str, duration_ms: float, verdict: str):
        """Log one finished word."""
        self.logger.info(json.dumps({
            "event": "word_complete",
            "word": word,
            "duration_ms": round(duration_ms, 3),
            "verdict": verdict,
            "timestamp": _now(),
        }))

    def log_error(
        self,
        word: Optional[str],
        error_type: str,
        error_message: str,
        stage: Optional[str] = None
    ):
        """
        Log a failed command or word.

        Args:
            word: Orientation word being processed, if any
            error_type: Exception class name
            error_message: Exception message
            stage: Command or harness step where it happened
        """
        self.logger.error(json.dumps({
            "event": "verification_error",
            "word": word,
            "error_type": error_type,
            "error_message": error_message,
            "stage": stage,
            "timestamp": _now(),
        }))

    def log_warning(self, word: Optional[str], warning_type: str, message: str):
        self.logger.warning(json.dumps({
            "event": "warning",
            "word": word,
            "warning_type": warning_type,
            "message": message,
            "timestamp": _now(),
        }))

    def log_performance(self, stage: str, duration_ms: float):
        self.logger.debug(json.dumps({
            "event": "performance",
            "stage": stage,
            "duration_ms": round(duration_ms, 3),
            "timestamp": _now(),
        }))


class JsonFormatter(logging.Formatter):
    """Wraps each record as a JSON line."""

    def format(self, record: logging.LogRecord) -> str:
        return json.dumps({
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "timestamp": _now(),
        })


def setup_logging(log_level: str = "INFO") -> StructuredLogger:
    """
    Set up structured logging for the CLI.

    Args:
        log_level: DEBUG, INFO, WARNING or ERROR (unknown names fall back to INFO)
    """
    level_map = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
    }
    level = level_map.get(log_level.upper(), logging.INFO)
    return StructuredLogger("msa_verify", level=level)
