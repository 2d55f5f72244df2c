"""
Base command system for Kats.

This module provides the abstract base class and result structures for the
sub-commands of the `kats` command line.
"""

import argparse
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dc_field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from ..characters import DirichletCharacter, parse_character, trivial_character
from ..config.settings import get_global_settings
from ..errors import CheckFailed, KatsError, ParseError, PreconditionError
from ..gf import FiniteField, make_field, parse_field
from ..qseries import ModularForm, read_form

logger = logging.getLogger(__name__)


class CommandStatus(Enum):
    """Status of a command run, with its process exit code."""
    VERIFIED = "verified"
    FAILED = "failed"
    ERROR = "error"

    @property
    def exit_code(self) -> int:
        return {CommandStatus.VERIFIED: 0, CommandStatus.FAILED: 1, CommandStatus.ERROR: 2}[self]


@dataclass
class CommandResult:
    """Standardized result structure for all command runs."""
    status: CommandStatus
    command_name: str
    message: str
    data: Dict[str, Any] = dc_field(default_factory=dict)
    form: Optional[ModularForm] = None
    text: Optional[str] = None
    execution_time_ms: float = 0.0

    @property
    def success(self) -> bool:
        return self.status is CommandStatus.VERIFIED

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_dict(self) -> Dict[str, Any]:
        """Convert result to a flat dictionary for key-value reports."""
        return {
            "command": self.command_name,
            "status": self.status.value,
            "exit_code": self.exit_code,
            "message": self.message,
            **self.data,
        }


@dataclass
class CommandContext:
    """Global options shared by every sub-command."""
    prec: Optional[int] = None
    field: Optional[FiniteField] = None
    inputs: List[str] = dc_field(default_factory=list)
    out: Optional[str] = None
    format: str = "text"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandContext":
        return cls(
            prec=args.prec,
            field=parse_field_option(args.field) if args.field else None,
            inputs=list(args.inputs or []),
            out=args.out,
            format=args.format or get_global_settings().report_format,
        )

    @property
    def precision(self) -> int:
        """Precision for constructed forms."""
        return self.prec if self.prec is not None else get_global_settings().default_precision

    def base_for(self, p: int) -> FiniteField:
        if self.field is None:
            return make_field(p)
        if self.field.p != p:
            raise PreconditionError("field", f"--field {self.field.descriptor()} does not have characteristic {p}")
        return self.field

    def load(self, path: str) -> ModularForm:
        """Read a form file, moved into --field and truncated to --prec when given."""
        f = read_form(path)
        if self.field is not None and self.field != f.base:
            f = f.change_ring(self.field)
        if self.prec is not None and self.prec < f.prec:
            f = f.truncate(self.prec)
        return f

    def load_inputs(self, count: int, name: str) -> List[ModularForm]:
        if len(self.inputs) != count:
            raise PreconditionError(name, f"expected {count} --in file(s), got {len(self.inputs)}")
        return [self.load(path) for path in self.inputs]


def parse_field_option(token: str) -> FiniteField:
    """p, p^d or a full GF(...) token."""
    token = token.strip()
    if token.startswith("GF("):
        return parse_field(token)
    p_str, _, d_str = token.partition("^")
    try:
        return make_field(int(p_str), int(d_str or 1))
    except ValueError as exc:
        raise ParseError("field", f"bad field option {token!r}; expected p^d") from exc


def parse_character_option(token: Optional[str], base: FiniteField) -> DirichletCharacter:
    """'triv' (or nothing) for the trivial character, else a chi(...) token."""
    if token is None or token.strip() in ("", "triv", "1"):
        return trivial_character(base)
    return parse_character(token, base)


def parse_int_list(token: Optional[str]) -> List[int]:
    if not token:
        return []
    try:
        return [int(part) for part in token.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError("int_list", f"bad integer list {token!r}") from exc


class BaseCommand(ABC):
    """
    Abstract base class for all Kats sub-commands.

    Each command declares its arguments, runs one library operation and
    returns a CommandResult. Library errors are converted to results by
    safe_execute and never escape as tracebacks.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Sub-command name as typed on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line help text."""
        pass

    @property
    def category(self) -> str:
        """Command category for organization and filtering."""
        return "general"

    @property
    def required_parameters(self) -> list[str]:
        """Argument names that must be present (not None) for the command."""
        return []

    def configure(self, parser: argparse.ArgumentParser) -> None:
        """Add the command's own arguments."""
        pass

    @abstractmethod
    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        pass

    def validate_parameters(self, args: argparse.Namespace) -> tuple[bool, str]:
        missing = [p for p in self.required_parameters if getattr(args, p, None) is None]
        if missing:
            return False, f"Missing required parameters: {', '.join(missing)}"
        return True, ""

    def result(self, status: CommandStatus, message: str, data=None, form=None) -> CommandResult:
        return CommandResult(status=status, command_name=self.name, message=message, data=data or {}, form=form)

    def safe_execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        """Run with parameter validation; errors become FAILED (1) or ERROR (2) results."""
        start_time = datetime.now()
        try:
            is_valid, error_msg = self.validate_parameters(args)
            if not is_valid:
                return self.result(CommandStatus.ERROR, f"Parameter validation failed: {error_msg}")
            result = self.execute(context, args)
        except CheckFailed as e:
            result = self.result(CommandStatus.FAILED, e.message, e.to_dict())
        except KatsError as e:
            result = self.result(CommandStatus.ERROR, e.message, e.to_dict())
        except Exception as e:
            result = self.result(CommandStatus.ERROR, str(e), {"error_type": type(e).__name__})
        result.execution_time_ms = (datetime.now() - start_time).total_seconds() * 1000
        logger.debug("%s finished with %s in %.1f ms", self.name, result.status.value, result.execution_time_ms)
        return result

    def get_schema(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "category": self.category,
            "required_parameters": self.required_parameters,
        }
