"""
Configuration settings for Kats.

This module manages arithmetic limits, precision defaults, report options and
logging, read from environment variables (optionally via a .env file).
"""

import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

# Load environment variables
load_dotenv()

_DEFAULT_CORPUS = Path(__file__).resolve().parents[2] / "corpus" / "corpus_entries.json"


@dataclass
class KatsSettings:
    """Configuration settings for the Kats toolkit."""

    # Arithmetic limits
    max_characteristic: int = 2**31
    max_field_order: int = 2**64
    root_search_limit: int = 2**16

    # Precision and certification
    default_precision: int = 100
    sturm_bound_enabled: bool = True

    # CLI Configuration
    report_format: str = "text"
    corpus_path: str = str(_DEFAULT_CORPUS)

    # Logging Configuration
    log_level: str = "WARNING"


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


def get_settings() -> KatsSettings:
    """Get application settings from environment variables."""
    return KatsSettings(
        max_characteristic=int(os.getenv("KATS_MAX_CHARACTERISTIC", str(2**31))),
        max_field_order=int(os.getenv("KATS_MAX_FIELD_ORDER", str(2**64))),
        root_search_limit=int(os.getenv("KATS_ROOT_SEARCH_LIMIT", str(2**16))),
        default_precision=int(os.getenv("KATS_DEFAULT_PRECISION", "100")),
        sturm_bound_enabled=_env_flag("KATS_STURM_BOUND", "true"),
        report_format=os.getenv("KATS_REPORT_FORMAT", "text"),
        corpus_path=os.getenv("KATS_CORPUS_PATH", str(_DEFAULT_CORPUS)),
        log_level=os.getenv("KATS_LOG_LEVEL", "WARNING"),
    )


# Global settings instance
_settings: Optional[KatsSettings] = None


def get_global_settings() -> KatsSettings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = get_settings()
    return _settings


def update_setting(key: str, value) -> None:
    """Update a specific setting value."""
    settings = get_global_settings()
    if key not in {f.name for f in fields(settings)}:
        raise ValueError(f"Unknown setting: {key}")
    setattr(settings, key, value)


def reset_settings() -> None:
    """Reset settings to reload from environment."""
    global _settings
    _settings = None


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Attach a rich handler to the package logger at the configured level."""
    logger = logging.getLogger("src")
    logger.setLevel((level or get_global_settings().log_level).upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    return logger
