"""
Level and weight old spaces of a form, and membership by linear solving.

A generator labelled (d, j) has q-expansion f(q^{d p^j}): Frobenius j times,
Hasse invariant up to the target weight, then B_d into the target level.
Words in A and Frob only change expansions through their Frobenius count, so
the weight old space in weight k' is spanned by f(q^{p^j}) for the j with
p^j k <= k' and (p - 1) | (k' - p^j k).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import Any, Dict, List, Optional, Tuple

import sympy

from ..config.settings import get_global_settings
from ..errors import BadLevel, MixedMetadata, PreconditionError
from ..gf import FieldElement, IncrementalSystem
from ..qseries import ModularForm, degeneracy_Bd, frobenius, hasse_mult, linear_combination
from ..reporting import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    """(d, j): B_d applied to the j-fold Frobenius image."""
    j: int
    d: int

    def __str__(self) -> str:
        return f"d={self.d}:j={self.j}"


@dataclass
class OldSpaceBasis:
    source: ModularForm
    level: int
    weight: int
    generators: List[Tuple[GeneratorLabel, ModularForm]] = field(default_factory=list)

    @property
    def labels(self) -> List[GeneratorLabel]:
        return [label for label, _ in self.generators]

    @property
    def forms(self) -> List[ModularForm]:
        return [g for _, g in self.generators]

    def is_empty(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def combination(self, coefficients: List[FieldElement]) -> ModularForm:
        """sum c_i g_i as a form of the basis level and weight."""
        if not self.generators:
            raise PreconditionError("combination", "empty basis")
        qexp = linear_combination(zip(coefficients, (g.qexp for g in self.forms)))
        return self.forms[0].derive(qexp)


def admissible_frobenius_counts(k: int, target_weight: int, p: int) -> List[int]:
    """The j >= 0 with p^j k <= k' and (p - 1) | (k' - p^j k)."""
    if target_weight < k:
        raise PreconditionError(
            "weight_old_generators", f"target weight {target_weight} is below the weight {k}"
        )
    counts = []
    j = 0
    while p ** j * k <= target_weight:
        if (target_weight - p ** j * k) % (p - 1) == 0:
            counts.append(j)
        if k <= 0:
            break
        j += 1
    return counts


def _generator(f: ModularForm, d: int, j: int, level: int, weight: int) -> ModularForm:
    g = f
    for _ in range(j):
        g = frobenius(g)
    g = hasse_mult(g, (weight - g.weight) // (f.p - 1))
    if d != 1 or level != f.level:
        g = degeneracy_Bd(g, d, level)
    return g


def _level_divisors(f: ModularForm, level: int) -> List[int]:
    if level % f.level or level % f.p == 0:
        raise BadLevel(
            "level_old_generators",
            f"target level {level} must be a multiple of {f.level} prime to p={f.p}",
            {"level": level, "source_level": f.level, "p": f.p},
        )
    return sympy.divisors(level // f.level)


def weight_old_generators(f: ModularForm, target_weight: int) -> OldSpaceBasis:
    basis = OldSpaceBasis(f, f.level, target_weight)
    for j in admissible_frobenius_counts(f.weight, target_weight, f.p):
        basis.generators.append((GeneratorLabel(j, 1), _generator(f, 1, j, f.level, target_weight)))
    return basis


def level_old_generators(f: ModularForm, level: int) -> OldSpaceBasis:
    basis = OldSpaceBasis(f, level, f.weight)
    for d in _level_divisors(f, level):
        basis.generators.append((GeneratorLabel(0, d), _generator(f, d, 0, level, f.weight)))
    return basis


def combined_old_generators(f: ModularForm, level: int, target_weight: int) -> OldSpaceBasis:
    """All f(q^{d p^j}), ordered by j and then d."""
    divisors = _level_divisors(f, level)
    basis = OldSpaceBasis(f, level, target_weight)
    for j in admissible_frobenius_counts(f.weight, target_weight, f.p):
        for d in divisors:
            basis.generators.append((GeneratorLabel(j, d), _generator(f, d, j, level, target_weight)))
    return basis


def recommended_precision(weight: int, level: int) -> int:
    """ceil(k' * M * prod_{l | M}(1 + 1/l) / 12) + 1."""
    index = Fraction(level)
    for l in sympy.primefactors(level):
        index *= Fraction(l + 1, l)
    return ceil(Fraction(max(weight, 0)) * index / 12) + 1


class Verdict(Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    INCONCLUSIVE = "inconclusive"


@dataclass
class MembershipResult(Report):
    verdict: Verdict
    labels: List[GeneratorLabel]
    coefficients: Optional[List[FieldElement]]
    certified_precision: int
    recommended_precision: int
    witness: Optional[int] = None
    rank: int = 0
    kernel: List[List[FieldElement]] = field(default_factory=list)

    @property
    def is_member(self) -> bool:
        """Member, possibly only up to the certified precision."""
        return self.verdict is not Verdict.NON_MEMBER

    @property
    def label(self) -> str:
        if self.verdict is Verdict.INCONCLUSIVE:
            return f"member up to precision {self.certified_precision}"
        return self.verdict.value

    def coefficient_map(self) -> Dict[GeneratorLabel, FieldElement]:
        return dict(zip(self.labels, self.coefficients or []))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.label,
            "generators": [str(label) for label in self.labels],
            "coefficients": self.coefficients,
            "certified_precision": self.certified_precision,
            "recommended_precision": self.recommended_precision,
            "rank": self.rank,
            "witness": self.witness,
        }


def membership(F: ModularForm, basis: OldSpaceBasis) -> MembershipResult:
    """Decide whether F lies in the span of the basis, equating a_0..a_B."""
    for label, g in basis.generators:
        if (g.level, g.weight, g.base) != (F.level, F.weight, F.base):
            raise MixedMetadata(
                "membership",
                f"generator {label} has (N, k) = ({g.level}, {g.weight}), form has ({F.level}, {F.weight})",
            )
    if basis.level != F.level or basis.weight != F.weight:
        raise MixedMetadata("membership", "basis and form disagree on level or weight")
    B = min([F.prec] + [g.prec for g in basis.forms])
    if B < 1:
        raise PreconditionError("membership", "common precision must be at least 1")

    ncols = len(basis)
    system = IncrementalSystem(F.base, ncols)
    for n in range(B + 1):
        row = [g.a(n) for g in basis.forms]
        if not system.add_equation(row, F.a(n), tag=n):
            break
    bound = recommended_precision(F.weight, F.level)
    if system.witness is not None:
        logger.debug("membership: inconsistent at exponent %d", system.witness)
        return MembershipResult(
            Verdict.NON_MEMBER, basis.labels, None, B, bound, system.witness, system.rank
        )
    solution = system.solve().solution
    verdict = Verdict.MEMBER
    if get_global_settings().sturm_bound_enabled and B < bound:
        logger.warning("membership certified only up to precision %d (recommended %d)", B, bound)
        verdict = Verdict.INCONCLUSIVE
    kernel = system.nullspace() if system.rank < ncols else []
    return MembershipResult(verdict, basis.labels, solution, B, bound, None, system.rank, kernel)
