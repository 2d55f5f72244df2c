"""
Exact Eisenstein series E_k^{eps1,eps2} over cyclotomic rationals.

    E_k^{eps1,eps2}(q) = c_0 + sum_{m>=1} (sum_{d|m} eps1(d) eps2(m/d) d^{k-1}) q^m

with c_0 = -B_k^{eps1}/2k when cond(eps2) = 1 and c_0 = 0 otherwise. This puts
eps1 on d^{k-1} and gates c_0 on eps2; some references use the transposed
convention.

For t > 1 the series is E_2(q) - t E_2(q^t) when k = 2 and both characters are
trivial (level t), and E_k^{eps1,eps2}(q^t) otherwise (level t*u*v).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

import sympy

from ..characters import CycloRational, LiftedCharacter, ReductionMap, gen_bernoulli
from ..errors import IllegalE2, ParityViolation, PreconditionError
from ..qseries import QExpansion

logger = logging.getLogger(__name__)


def _primitive(character: LiftedCharacter, role: str) -> LiftedCharacter:
    if character.conductor != character.modulus:
        logger.warning(
            "%s: character mod %d is imprimitive; using its primitive form mod %d",
            role,
            character.modulus,
            character.conductor,
        )
        return character.primitive()
    return character


@dataclass(frozen=True)
class EisensteinSpec:
    """Weight, the pair of (primitive) lifted characters, and the stretch t."""
    k: int
    chi1: LiftedCharacter
    chi2: LiftedCharacter
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "chi1", _primitive(self.chi1, "eisenstein"))
        object.__setattr__(self, "chi2", _primitive(self.chi2, "eisenstein"))
        if self.k < 1:
            raise PreconditionError("eisenstein", f"weight must be at least 1, got {self.k}")
        if self.t < 1:
            raise PreconditionError("eisenstein", f"t must be positive, got {self.t}")
        sign = self.chi1(-1) * self.chi2(-1)
        if sign != (-1) ** self.k:
            raise ParityViolation(
                "eisenstein",
                f"(eps1 eps2)(-1) = {sign.token()} but (-1)^k = {(-1) ** self.k}",
                {"k": self.k},
            )
        if self.k == 2 and self.is_trivial_pair and self.t == 1:
            raise IllegalE2("eisenstein", "E_2 with trivial characters needs t > 1")

    @property
    def is_trivial_pair(self) -> bool:
        return self.chi1.is_trivial() and self.chi2.is_trivial()

    @property
    def u(self) -> int:
        return self.chi1.conductor

    @property
    def v(self) -> int:
        return self.chi2.conductor

    @property
    def level(self) -> int:
        if self.k == 2 and self.is_trivial_pair:
            return self.t
        return self.t * self.u * self.v

    def constant_term(self) -> CycloRational:
        if self.v != 1:
            return CycloRational.rational(0)
        return gen_bernoulli(self.k, self.chi1) / (-2 * self.k)


@dataclass(frozen=True)
class CycloExpansion:
    """Exact coefficients c_0..c_prec in cyclotomic fields."""
    coeffs: Tuple[CycloRational, ...]
    prec: int
    level: int
    weight: int

    def reduce(self, reduction: ReductionMap) -> QExpansion:
        return QExpansion(reduction.target, self.prec, tuple(reduction(c) for c in self.coeffs))

    def to_lines(self) -> Tuple[str, ...]:
        return tuple(f"a{n}={c.token()}" for n, c in enumerate(self.coeffs) if not c.is_zero())

    def to_text(self) -> str:
        """Header lines, then the nonzero a<n>=cyc(...) tokens."""
        lines = (f"exact N={self.level} k={self.weight}", f"prec={self.prec}") + self.to_lines()
        return "\n".join(lines) + "\n"


def divisor_sum(spec: EisensteinSpec, m: int) -> CycloRational:
    """sum_{d|m} eps1(d) eps2(m/d) d^{k-1}."""
    total = CycloRational.rational(0)
    for d in sympy.divisors(m):
        a, b = spec.chi1(d), spec.chi2(m // d)
        if a.is_zero() or b.is_zero():
            continue
        total = total + a * b * Fraction(d) ** (spec.k - 1)
    return total


def _untwisted(spec: EisensteinSpec, prec: int) -> Dict[int, CycloRational]:
    coeffs = {0: spec.constant_term()}
    for m in range(1, prec + 1):
        coeffs[m] = divisor_sum(spec, m)
    return coeffs


def eisenstein_qexp(spec: EisensteinSpec, prec: int) -> CycloExpansion:
    t = spec.t
    zero = CycloRational.rational(0)
    if t == 1:
        base = _untwisted(spec, prec)
        coeffs = [base[m] for m in range(prec + 1)]
    elif spec.k == 2 and spec.is_trivial_pair:
        # E_2(q) - t E_2(q^t), both terms from the (non-modular) E_2
        e2 = {0: Fraction(-1, 24)}
        e2.update({m: Fraction(int(sympy.divisor_sigma(m, 1))) for m in range(1, prec + 1)})
        coeffs = [
            CycloRational.rational(e2[m] - (t * e2[m // t] if m % t == 0 else 0))
            for m in range(prec + 1)
        ]
    else:
        base = _untwisted(spec, prec // t)
        coeffs = [base[m // t] if m % t == 0 else zero for m in range(prec + 1)]
    logger.debug("eisenstein_qexp: k=%d u=%d v=%d t=%d prec=%d", spec.k, spec.u, spec.v, t, prec)
    return CycloExpansion(tuple(coeffs), prec, spec.level, spec.k)
