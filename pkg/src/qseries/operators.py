"""
Operators on mod-p forms: Hecke, diamond, theta, Hasse invariant, Frobenius
and the level degeneracy maps.

Every operator records the exact precision of its output:

    hecke_Tn          floor(prec / n)
    frobenius         p * prec
    degeneracy_Bd     d * prec
    divide_exponents  floor(prec / l)
    theta, diamond, hasse_mult   prec
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Optional

import sympy

from ..errors import (
    BadLevelDivisibility,
    CharacteristicDividesLevel,
    NonIntegralLevel,
    NotCoprime,
    NotNormalizable,
    NotPure,
    PreconditionError,
    PrecisionUnderflow,
)
from ..gf import FieldElement
from .expansion import QExpansion
from .form import ModularForm

logger = logging.getLogger(__name__)


def _power(f: ModularForm, d: int, e: int) -> FieldElement:
    # d^e in the base field, with 0^0 = 1 and 0^e = 0 otherwise
    value = f.base(d)
    if not value:
        return f.base.one() if e == 0 else value
    return value ** e


def hecke_Tn(f: ModularForm, n: int) -> ModularForm:
    """T_n via a_m(T_n f) = sum_{d | gcd(m, n)} eps(d) d^{k-1} a_{mn/d^2}.

    eps is the nebentypus at the level of f, so primes dividing N act as U_l.
    """
    if n < 1:
        raise PreconditionError("hecke_Tn", f"n must be positive, got {n}")
    prec = f.prec // n
    if prec < 1:
        raise PrecisionUnderflow(
            "hecke_Tn",
            f"T_{n} of a form known to precision {f.prec} has no coefficients past a_0",
            {"n": n, "prec": f.prec},
        )
    if n == 1:
        return f
    weights = {d: f.nebentypus(d) * _power(f, d, f.weight - 1) for d in sympy.divisors(n)}
    coeffs = []
    for m in range(prec + 1):
        total = f.base.zero()
        for d, w in weights.items():
            if w and m % d == 0:
                total = total + w * f.a(m * n // (d * d))
        coeffs.append(total)
    logger.debug("hecke_Tn: n=%d, precision %d -> %d", n, f.prec, prec)
    return f.derive(QExpansion(f.base, prec, tuple(coeffs)))


def diamond(f: ModularForm, d: int) -> ModularForm:
    """<d> f = eps(d) f."""
    if gcd(d, f.level) != 1:
        raise NotCoprime("diamond", f"gcd({d}, {f.level}) != 1", {"d": d, "level": f.level})
    return f.derive(f.qexp.scale(f.character(d)))


def theta(f: ModularForm) -> ModularForm:
    """q d/dq; weight k + p + 1, always cuspidal."""
    coeffs = tuple(f.base(n) * c for n, c in enumerate(f.qexp.coeffs))
    return f.derive(QExpansion(f.base, f.prec, coeffs), weight=f.weight + f.p + 1, cuspidal=True)


def theta_power(f: ModularForm, a: int) -> ModularForm:
    for _ in range(a):
        f = theta(f)
    return f


def hasse_mult(f: ModularForm, t: int) -> ModularForm:
    """A^t f: same expansion, weight k + t(p - 1)."""
    if t < 0:
        raise PreconditionError("hasse_mult", f"t must be non-negative, got {t}")
    if t == 0:
        return f
    return f.derive(f.qexp, weight=f.weight + t * (f.p - 1))


def frobenius(f: ModularForm) -> ModularForm:
    """f(q^p); weight p k."""
    return f.derive(f.qexp.stretch(f.p), weight=f.p * f.weight)


def degeneracy_Bd(f: ModularForm, d: int, target_level: int) -> ModularForm:
    """B_d^M f = f(q^d) at level M.

    The character keeps its modulus (which divides N, hence M); its values as a
    nebentypus at level M follow from `ModularForm.nebentypus`.
    """
    p = f.p
    if d < 1 or target_level < 1:
        raise BadLevelDivisibility(
            "degeneracy_Bd",
            f"d={d} and M={target_level} must be positive",
            {"level": f.level, "d": d, "M": target_level},
        )
    if d % p == 0 or target_level % p == 0:
        raise CharacteristicDividesLevel(
            "degeneracy_Bd",
            f"p={p} divides d={d} or M={target_level}; use frobenius for q -> q^p",
        )
    if target_level % d or (target_level // d) % f.level:
        raise BadLevelDivisibility(
            "degeneracy_Bd",
            f"level {f.level} does not divide M/d = {target_level}/{d}",
            {"level": f.level, "d": d, "M": target_level},
        )
    return f.derive(f.qexp.stretch(d), level=target_level)


def divide_exponents(f: ModularForm, l: int) -> ModularForm:
    """The unique g with f(q) = g(q^l), at level N/l."""
    if l == f.p or not sympy.isprime(l):
        raise PreconditionError("divide_exponents", f"l={l} must be a prime different from p={f.p}")
    for m, c in enumerate(f.qexp.coeffs):
        if c and m % l:
            raise NotPure(
                "divide_exponents",
                f"a_{m} != 0 with {l} not dividing {m}",
                {"witness": m, "value": c.token()},
            )
    prec = f.prec // l
    if f.level % l:
        if not f.qexp.is_zero():
            raise NonIntegralLevel(
                "divide_exponents",
                f"nonzero form supported on q^{l}-powers but {l} does not divide level {f.level}",
                {"witness": f.qexp.first_nonzero()},
            )
        return f.derive(QExpansion.zero(f.base, prec))
    level = f.level // l
    character = f.character
    if level % character.modulus:
        character = character.primitive()
        if level % character.modulus:
            raise NonIntegralLevel(
                "divide_exponents",
                f"conductor {character.modulus} of the character does not divide {level}",
            )
    coeffs = tuple(f.qexp.coeffs[l * m] for m in range(prec + 1))
    return f.derive(QExpansion(f.base, prec, coeffs), level=level, character=character)


@dataclass
class FailureWitness:
    """First coefficient where T_l f and a_l f differ."""
    l: int
    m: int
    lhs: FieldElement
    rhs: FieldElement

    def to_dict(self) -> Dict[str, str]:
        return {"l": str(self.l), "m": str(self.m), "lhs": self.lhs.token(), "rhs": self.rhs.token()}


@dataclass
class EigenCheck:
    """Outcome of is_eigen_upto."""
    eigenvalues: Dict[int, FieldElement] = field(default_factory=dict)
    witness: Optional[FailureWitness] = None
    skipped: List[int] = field(default_factory=list)
    precision: Dict[int, int] = field(default_factory=dict)

    @property
    def is_eigen(self) -> bool:
        return self.witness is None


def normalize(f: ModularForm) -> ModularForm:
    """f / a_1(f)."""
    if f.prec < 1 or f.a(1).is_zero():
        raise NotNormalizable("normalize", "a_1 = 0, form cannot be normalized")
    if f.a(1) == 1:
        return f
    return f.derive(f.qexp.scale(f.a(1).inverse()))


def is_eigen_upto(f: ModularForm, bound: int, exclude: Iterable[int] = ()) -> EigenCheck:
    """Check T_l f = a_l f for primes l <= bound outside `exclude`, to available precision."""
    g = normalize(f)
    exclude = set(exclude)
    result = EigenCheck()
    for l in sympy.primerange(2, bound + 1):
        if l in exclude:
            continue
        if g.prec // l < 1:
            result.skipped.append(l)
            continue
        image = hecke_Tn(g, l)
        eigenvalue = g.a(l)
        result.eigenvalues[l] = eigenvalue
        result.precision[l] = image.prec
        for m in range(image.prec + 1):
            lhs, rhs = image.a(m), eigenvalue * g.a(m)
            if lhs != rhs:
                result.witness = FailureWitness(l, m, lhs, rhs)
                logger.debug("is_eigen_upto: T_%d fails at m=%d", l, m)
                return result
    return result
