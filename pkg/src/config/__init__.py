"""
Configuration package initialization.
"""

from .settings import (
    KatsSettings,
    configure_logging,
    get_global_settings,
    get_settings,
    reset_settings,
    update_setting,
)

__all__ = [
    "KatsSettings",
    "get_settings",
    "get_global_settings",
    "update_setting",
    "reset_settings",
    "configure_logging",
]
