"""
Lifting finite-field characters to characteristic zero and reducing back.

The lift of a character of order n takes values in Q(zeta_n); reduction sends
zeta_n to nth_root_of_unity(target, n). All roots of unity of the target come
from the same multiplicative generator, so the maps for different n are
compatible with the inclusions Q(zeta_n) -> Q(zeta_m).
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from ..errors import NotPIntegral, RamifiedOrder
from ..gf import FieldElement, FiniteField, nth_root_of_unity
from .cyclotomic import CycloRational
from .dirichlet import DirichletCharacter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionMap:
    """Reduction Z_(p)[zeta_n] -> target, zeta_n -> nth_root_of_unity(target, n)."""
    target: FiniteField

    @property
    def p(self) -> int:
        return self.target.p

    def rational(self, value) -> FieldElement:
        p = self.p
        if value.denominator % p == 0:
            raise NotPIntegral(
                "reduce",
                f"{value} has denominator divisible by {p}",
                {"value": str(value), "p": p},
            )
        return self.target(value.numerator * pow(value.denominator, -1, p))

    def __call__(self, x: CycloRational) -> FieldElement:
        if x.is_rational():
            return self.rational(x.coords[0])
        if x.n % self.p == 0:
            raise RamifiedOrder("reduce", f"cannot reduce Q(zeta_{x.n}) at p={self.p}")
        zeta = nth_root_of_unity(self.target, x.n)
        result = self.target.zero()
        for c in reversed(x.coords):
            result = result * zeta + self.rational(c)
        return result


class LiftedCharacter:
    """A character with values zeta_n^e in Q(zeta_n), n the order of its reduction."""

    def __init__(self, base: DirichletCharacter, exponents: Tuple[int, ...]):
        self.base = base
        self.order = base.order
        self.exponents = exponents

    @property
    def modulus(self) -> int:
        return self.base.modulus

    @property
    def conductor(self) -> int:
        return self.base.conductor

    def is_trivial(self) -> bool:
        return self.base.is_trivial()

    def __call__(self, m: int) -> CycloRational:
        if gcd(m, self.modulus) != 1:
            return CycloRational.rational(0, self.order)
        e = sum(a * b for a, b in zip(self.exponents, self.base.group.logs(m)))
        return CycloRational.zeta_power(self.order, e)

    def primitive(self) -> "LiftedCharacter":
        return char_lift(self.base.primitive())[0]

    def __repr__(self) -> str:
        return f"LiftedCharacter({self.base.token()}, n={self.order}, exponents={self.exponents})"


def char_lift(character: DirichletCharacter) -> Tuple[LiftedCharacter, ReductionMap]:
    """Lift a character to Q(zeta_n), n = its order, with the matching reduction map."""
    n = character.order
    p = character.target.p
    if n % p == 0:
        raise RamifiedOrder(
            "char_lift",
            f"character order {n} is divisible by p={p}",
            {"order": n, "p": p},
        )
    zeta = nth_root_of_unity(character.target, n)
    powers = {}
    power = character.target.one()
    for e in range(n):
        powers.setdefault(power, e)
        power = power * zeta
    exponents = tuple(powers[v] for v in character.values)
    logger.debug("char_lift %s: n=%d exponents=%s", character.token(), n, exponents)
    return LiftedCharacter(character, exponents), ReductionMap(character.target)
