"""
Command registry for Kats.

This module manages the registration and discovery of the `kats`
sub-commands.
"""

from typing import Dict, List, Optional, Type

from .base import BaseCommand
from .checks import CheckCor37Command, CheckCor47Command, CheckProp24Command, CompareCommand
from .forms import (
    CorpusCommand,
    DegeneracyCommand,
    EisensteinCommand,
    FrobeniusCommand,
    HeckeCommand,
    Lemma45Command,
    ThetaCommand,
)
from .newforms import DecomposeCommand, DecomposeThetaCommand, KillCommand, MemberCommand, OldSpaceCommand


class CommandRegistry:
    """Central registry for all Kats commands."""

    def __init__(self):
        self._commands: Dict[str, BaseCommand] = {}
        self._command_classes: Dict[str, Type[BaseCommand]] = {}
        self._initialize_commands()

    def _initialize_commands(self):
        """Initialize and register all available commands."""
        command_classes = [
            EisensteinCommand,
            HeckeCommand,
            ThetaCommand,
            FrobeniusCommand,
            DegeneracyCommand,
            KillCommand,
            DecomposeThetaCommand,
            OldSpaceCommand,
            MemberCommand,
            DecomposeCommand,
            CheckCor37Command,
            CheckCor47Command,
            CheckProp24Command,
            CompareCommand,
            Lemma45Command,
            CorpusCommand,
        ]

        for command_class in command_classes:
            command = command_class()
            self._commands[command.name] = command
            self._command_classes[command.name] = command_class

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """Get a command instance by name."""
        return self._commands.get(name)

    def get_all_commands(self) -> Dict[str, BaseCommand]:
        """Get all registered commands."""
        return self._commands.copy()

    def list_command_names(self) -> List[str]:
        return list(self._commands.keys())

    def list_categories(self) -> List[str]:
        return sorted({c.category for c in self._commands.values()})


# Global registry instance
command_registry = CommandRegistry()


def get_command_registry() -> CommandRegistry:
    """Get the global command registry instance."""
    return command_registry


def get_command_by_name(name: str) -> Optional[BaseCommand]:
    """Convenience function to get a command by name."""
    return command_registry.get_command(name)
