"""
Command package initialization.
"""

from .base import BaseCommand, CommandContext, CommandResult, CommandStatus
from .registry import CommandRegistry, get_command_by_name, get_command_registry

__all__ = [
    "BaseCommand",
    "CommandContext",
    "CommandResult",
    "CommandStatus",
    "CommandRegistry",
    "get_command_registry",
    "get_command_by_name",
]
