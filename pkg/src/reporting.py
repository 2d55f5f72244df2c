"""
Key-value text reports for certificates and checks.

Reports are `key=value` lines with sorted keys so they can be diffed.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict

from .gf import FieldElement


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, FieldElement):
        return value.token()
    if hasattr(value, "token"):
        return value.token()
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}:{format_value(v)}" for k, v in sorted(value.items()))
    return str(value)


def render_report(data: Dict[str, Any]) -> str:
    return "\n".join(f"{key}={format_value(data[key])}" for key in sorted(data)) + "\n"


class Report(ABC):
    """Anything that serializes to a key-value report."""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        pass

    def to_report(self) -> str:
        return render_report(self.to_dict())
