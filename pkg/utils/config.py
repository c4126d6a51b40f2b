"""
Configuration Management

Loading of run defaults, validation of command-line run configurations and a
check of reports against the documented JSON schema.
"""

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from jsonschema import Draft7Validator

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config" / "verify.yaml"
DEFAULT_SCHEMA_PATH = Path(__file__).parent.parent / "config" / "report_schema.json"

DEFAULT_CONFIG: Dict[str, Any] = {
    "run": {"max_n": 10, "max_n_limit": 14, "workers": None, "format": "text"},
    "words": {"max_len": 14},
    "audit": {"max_len": 9},
    "logging": {"level": "WARNING"},
}

COMMANDS = ("enumerate", "present", "orbits", "isoclasses", "verify", "words", "audit")
FORMATS = ("text", "json")
WORD_PATTERN = re.compile(r"^[+-]*$")


def load_run_config(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load and validate run defaults from YAML.

    A missing default file falls back to built-in defaults; an explicitly
    requested file must exist.

    Args:
        config_path: Path to verify.yaml, or None for the packaged default

    Returns:
        Configuration dictionary

    Raises:
        FileNotFoundError: If an explicit config file doesn't exist
        ValueError: If config is invalid
    """
    if config_path is None:
        if not DEFAULT_CONFIG_PATH.exists():
            return {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
        config_path = DEFAULT_CONFIG_PATH
    if not config_path.exists():
        raise FileNotFoundError(f"Run config not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}

    # Validate required sections
    required_sections = ["run", "words", "audit"]
    for section in required_sections:
        if section not in config:
            raise ValueError(f"Missing required config section: {section}")

    merged = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
    for section, values in config.items():
        merged.setdefault(section, {}).update(values or {})
    if merged["run"]["max_n_limit"] < 2:
        raise ValueError("run.max_n_limit must be at least 2")
    return merged


@dataclass
class RunConfig:
    """One CLI invocation after defaults and options are combined."""

    command: str
    word: Optional[str] = None
    max_n: Optional[int] = None
    max_len: Optional[int] = None
    output_format: str = "text"
    workers: Optional[int] = None
    out: Optional[Path] = None

    def validate(self, max_n_limit: int = 14) -> None:
        """
        Raises:
            ValueError: On any invalid field
        """
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.word is not None and not WORD_PATTERN.match(self.word):
            raise ValueError(f"word must match [+-]*, got {self.word!r}")
        if self.max_n is not None and not 2 <= self.max_n <= max_n_limit:
            raise ValueError(f"max_n must be between 2 and {max_n_limit}, got {self.max_n}")
        if self.max_len is not None and self.max_len < 0:
            raise ValueError(f"max_len must be non-negative, got {self.max_len}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.output_format!r}")


def load_json_schema(schema_path: Path = DEFAULT_SCHEMA_PATH) -> Dict[str, Any]:
    """
    Load JSON schema for report validation.

    Args:
        schema_path: Path to report_schema.json
    """
    with open(schema_path, "r", encoding="utf-8") as f:
        return json.load(f)


def report_schema_errors(report: Dict[str, Any], schema: Dict[str, Any]) -> List[str]:
    """
    Every violation of the schema by one verification report.

    Returns:
        Messages of the form "reps/0/dim: 'x' is not of type 'integer'"; empty if valid
    """
    validator = Draft7Validator(schema)
    return [
        f"{'/'.join(str(part) for part in error.absolute_path) or '(report)'}: {error.message}"
        for error in validator.iter_errors(report)
    ]


def validate_report_against_schema(report: Dict[str, Any], schema: Dict[str, Any]) -> bool:
    return not report_schema_errors(report, schema)
