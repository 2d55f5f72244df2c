"""
Semisimple reducible mod-p representations eps' chi_p^a + eps chi_p^b.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from ..characters import DirichletCharacter
from ..errors import BadPrime, FieldMismatch
from ..gf import FieldElement, FiniteField


@dataclass(frozen=True)
class ReducibleRep:
    """eps_prime * chi_p^a (+) eps * chi_p^b, exponents taken mod p - 1."""
    eps: DirichletCharacter
    eps_prime: DirichletCharacter
    a: int
    b: int
    level: Optional[int] = None

    def __post_init__(self):
        if self.eps.target != self.eps_prime.target:
            raise FieldMismatch("reducible_rep", "summand characters live in different fields")
        m = self.p - 1
        object.__setattr__(self, "a", self.a % m)
        object.__setattr__(self, "b", self.b % m)
        if self.level is None:
            object.__setattr__(self, "level", self.serre_level())

    @property
    def p(self) -> int:
        return self.eps.target.p

    @property
    def target(self) -> FiniteField:
        return self.eps.target

    def serre_level(self) -> int:
        return self.eps.conductor * self.eps_prime.conductor

    def summands(self) -> Tuple[Tuple[DirichletCharacter, int], Tuple[DirichletCharacter, int]]:
        """The two (primitive character, exponent) summands, eps' first."""
        return ((self.eps_prime.primitive(), self.a), (self.eps.primitive(), self.b))

    def change_ring(self, target: FiniteField) -> "ReducibleRep":
        return ReducibleRep(
            self.eps.change_ring(target), self.eps_prime.change_ring(target), self.a, self.b, self.level
        )

    def describe(self) -> str:
        return (
            f"{self.eps_prime.primitive().token()}*chi_p^{self.a} + "
            f"{self.eps.primitive().token()}*chi_p^{self.b}"
        )


def rep_trace_det(rep: ReducibleRep, l: int) -> Tuple[FieldElement, FieldElement]:
    """Trace and determinant of Frob_l."""
    if l % rep.p == 0 or gcd(l, rep.level) != 1:
        raise BadPrime(
            "rep_trace_det",
            f"l={l} divides p*N = {rep.p}*{rep.level}",
            {"l": l, "p": rep.p, "level": rep.level},
        )
    F = rep.target
    x, y = rep.eps_prime(l), rep.eps(l)
    trace = x * F(l) ** rep.a + y * F(l) ** rep.b
    det = x * y * F(l) ** (rep.a + rep.b)
    return trace, det


@dataclass(frozen=True)
class RepEquivalence:
    equal: bool
    case: Optional[str] = None


def rep_equiv(first: ReducibleRep, second: ReducibleRep) -> RepEquivalence:
    """Compare the unordered summand pairs; case is 'direct' or 'swapped'."""
    if first.p != second.p:
        raise FieldMismatch("rep_equiv", f"p={first.p} vs p={second.p}")
    (x1, a1), (y1, b1) = first.summands()
    (x2, a2), (y2, b2) = second.summands()
    if x1 == x2 and a1 == a2 and y1 == y2 and b1 == b2:
        return RepEquivalence(True, "direct")
    if x1 == y2 and a1 == b2 and y1 == x2 and b1 == a2:
        return RepEquivalence(True, "swapped")
    return RepEquivalence(False)
