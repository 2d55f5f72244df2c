"""
Mod-p modular forms as q-expansions with metadata.
"""

from dataclasses import dataclass, field, replace
from math import gcd
from typing import TYPE_CHECKING, FrozenSet, Iterable, Optional

from ..characters import DirichletCharacter, trivial_character
from ..errors import (
    BadLevelDivisibility,
    CharacteristicDividesLevel,
    FieldMismatch,
    InconsistentFlags,
)
from ..gf import FieldElement, FiniteField
from .expansion import QExpansion

if TYPE_CHECKING:
    from ..eisenstein.representation import ReducibleRep

CUSPIDAL = "cuspidal"
NORMALIZED = "normalized"
ASSERTED_NEWFORM = "asserted_newform"
ASSERTED_MINIMAL_WEIGHT = "asserted_minimal_weight"

KNOWN_FLAGS = (CUSPIDAL, NORMALIZED, ASSERTED_NEWFORM, ASSERTED_MINIMAL_WEIGHT)


@dataclass(frozen=True)
class ModularForm:
    """
    A form in M_k(Gamma_1(N), eps) over a finite field, known through its
    q-expansion at infinity.

    The character's modulus divides the level; `nebentypus` evaluates it at
    the level, so it vanishes on integers sharing a factor with N.
    Flags are metadata. Only `cuspidal` (a_0 = 0) and `normalized` (a_1 = 1)
    are checked against the coefficients; the asserted_* flags are trusted.
    """
    qexp: QExpansion
    level: int
    weight: int
    character: DirichletCharacter
    flags: FrozenSet[str] = frozenset()
    rep: Optional["ReducibleRep"] = field(default=None, compare=False)

    def __post_init__(self):
        p = self.qexp.base.p
        if self.level < 1 or self.level % p == 0:
            raise CharacteristicDividesLevel(
                "modular_form", f"level {self.level} must be positive and prime to p={p}"
            )
        if self.level % self.character.modulus:
            raise BadLevelDivisibility(
                "modular_form",
                f"character modulus {self.character.modulus} does not divide level {self.level}",
            )
        if self.character.target != self.qexp.base:
            raise FieldMismatch("modular_form", "character and coefficients live in different fields")
        unknown = set(self.flags) - set(KNOWN_FLAGS)
        if unknown:
            raise InconsistentFlags("modular_form", f"unknown flags {sorted(unknown)}")
        if CUSPIDAL in self.flags and self.qexp.coeffs[0]:
            raise InconsistentFlags("modular_form", "cuspidal form with a_0 != 0")
        if NORMALIZED in self.flags and (self.qexp.prec < 1 or self.qexp.coeffs[1] != 1):
            raise InconsistentFlags("modular_form", "normalized form with a_1 != 1")
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def base(self) -> FiniteField:
        return self.qexp.base

    @property
    def p(self) -> int:
        return self.qexp.base.p

    @property
    def prec(self) -> int:
        return self.qexp.prec

    def a(self, n: int) -> FieldElement:
        return self.qexp[n]

    def nebentypus(self, m: int) -> FieldElement:
        if gcd(m, self.level) != 1:
            return self.base.zero()
        return self.character(m)

    @property
    def is_cuspidal(self) -> bool:
        return CUSPIDAL in self.flags

    @property
    def is_normalized(self) -> bool:
        return NORMALIZED in self.flags

    def derive(
        self,
        qexp: QExpansion,
        *,
        level: Optional[int] = None,
        weight: Optional[int] = None,
        character: Optional[DirichletCharacter] = None,
        cuspidal: Optional[bool] = None,
    ) -> "ModularForm":
        """A new form from an operator's output; asserted flags and rep data are dropped."""
        if cuspidal is None:
            cuspidal = self.is_cuspidal
        flags = set()
        if cuspidal and not qexp.coeffs[0]:
            flags.add(CUSPIDAL)
        if qexp.prec >= 1 and qexp.coeffs[1] == 1:
            flags.add(NORMALIZED)
        return ModularForm(
            qexp=qexp,
            level=self.level if level is None else level,
            weight=self.weight if weight is None else weight,
            character=self.character if character is None else character,
            flags=frozenset(flags),
        )

    def truncate(self, prec: int) -> "ModularForm":
        return replace(self, qexp=self.qexp.truncate(prec))

    def change_ring(self, target: FiniteField) -> "ModularForm":
        rep = self.rep.change_ring(target) if self.rep is not None else None
        return ModularForm(
            qexp=self.qexp.change_ring(target),
            level=self.level,
            weight=self.weight,
            character=self.character.change_ring(target),
            flags=self.flags,
            rep=rep,
        )

    def __repr__(self) -> str:
        return (
            f"ModularForm(N={self.level}, k={self.weight}, char={self.character.token()}, "
            f"prec={self.prec}, field={self.base.descriptor()})"
        )


def make_form(
    base: FiniteField,
    coefficients,
    level: int = 1,
    weight: int = 0,
    character: Optional[DirichletCharacter] = None,
    prec: Optional[int] = None,
    flags: Iterable[str] = (),
) -> ModularForm:
    """Convenience constructor from a coefficient list or {n: a_n} dict."""
    if isinstance(coefficients, dict):
        qexp = QExpansion.from_dict(base, coefficients, prec if prec is not None else max(coefficients, default=0))
    else:
        qexp = QExpansion.from_coefficients(base, list(coefficients), prec)
    character = character if character is not None else trivial_character(base)
    return ModularForm(qexp, level, weight, character, frozenset(flags))
