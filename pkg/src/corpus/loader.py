"""
Corpus loader for Kats.

Entries live in a JSON file (corpus/corpus_entries.json by default); each
names an integer construction which is expanded exactly and then reduced.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import sympy

from ..config.settings import get_global_settings
from ..errors import BadPrime, ParseError, UnknownEntry
from ..gf import FiniteField, make_field
from ..qseries import NORMALIZED, ModularForm, QExpansion
from ..characters import trivial_character
from .eta import classical_eisenstein, eta_product

logger = logging.getLogger(__name__)

_KINDS = ("eta", "eisenstein")


class CorpusLoader:
    """Loads corpus entries and expands them over the integers."""

    def __init__(self, path: Optional[str] = None):
        self.path = Path(path or get_global_settings().corpus_path)
        self.entries = self._load()

    def _load(self) -> Dict[str, Dict[str, Any]]:
        try:
            with open(self.path, "r") as handle:
                entries = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError("corpus_load", f"cannot read corpus file {self.path}: {exc}") from exc
        for name, entry in entries.items():
            if entry.get("kind") not in _KINDS:
                raise ParseError("corpus_load", f"entry {name!r} has unknown kind {entry.get('kind')!r}")
        logger.debug("Loaded %d corpus entries from %s", len(entries), self.path)
        return entries

    def list_entries(self) -> List[str]:
        """List all entry names."""
        return list(self.entries.keys())

    def get_entry(self, name: str) -> Dict[str, Any]:
        entry = self.entries.get(name)
        if entry is None:
            raise UnknownEntry(
                "corpus_get", f"unknown corpus entry {name!r}", {"known": sorted(self.entries)}
            )
        return entry

    def integer_expansion(self, name: str, prec: int) -> List[int]:
        """a_0..a_prec over the integers."""
        entry = self.get_entry(name)
        if entry["kind"] == "eta":
            return eta_product([tuple(f) for f in entry["factors"]], prec)
        return classical_eisenstein(entry["weight"], prec)

    def get_form(self, name: str, p: int, prec: int, base: Optional[FiniteField] = None) -> ModularForm:
        entry = self.get_entry(name)
        if not sympy.isprime(p) or entry["level"] % p == 0:
            raise BadPrime(
                "corpus_get",
                f"p={p} must be a prime not dividing the level {entry['level']} of {name}",
                {"p": p, "level": entry["level"]},
            )
        base = base or make_field(p)
        if base.p != p:
            raise BadPrime("corpus_get", f"field {base.descriptor()} does not have characteristic {p}")
        values = self.integer_expansion(name, prec)
        qexp = QExpansion.from_coefficients(base, values, prec)
        flags = set(entry.get("flags", ()))
        if prec >= 1 and qexp.coeffs[1] == 1:
            flags.add(NORMALIZED)
        return ModularForm(
            qexp=qexp,
            level=entry["level"],
            weight=entry["weight"],
            character=trivial_character(base),
            flags=frozenset(flags),
        )


# Global instance
_loader: Optional[CorpusLoader] = None


def get_corpus_loader() -> CorpusLoader:
    """Get corpus loader instance."""
    global _loader
    if _loader is None:
        _loader = CorpusLoader()
    return _loader


def reset_corpus_loader() -> None:
    global _loader
    _loader = None


def corpus_get(name: str, p: int, prec: int, base: Optional[FiniteField] = None) -> ModularForm:
    """The corpus entry reduced mod p to precision prec."""
    return get_corpus_loader().get_form(name, p, prec, base)


def list_entries() -> List[str]:
    """List available corpus entries."""
    return get_corpus_loader().list_entries()
