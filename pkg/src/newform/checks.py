"""
Coefficient checks between eigenforms: weight/character compatibility,
eigensystem comparison, and the prime-by-prime identities relating an
eigenform to a newform with the same eigensystem.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

import sympy

from ..errors import (
    HypothesisViolation,
    IdentityFail,
    LevelNotDivisible,
    MixedMetadata,
    NotEigenform,
)
from ..gf import FieldElement
from ..qseries import ModularForm, is_eigen_upto, normalize, theta_power
from ..reporting import Report

logger = logging.getLogger(__name__)


# Weight congruence and characters

@dataclass
class Prop24Report(Report):
    weight_first: int
    weight_second: int
    weights_congruent: bool
    characters_equal: bool
    expansions_agree: bool
    common_precision: int
    hasse_exponent: Optional[int] = None
    raised: Optional[str] = None

    @property
    def consistent(self) -> bool:
        return self.weights_congruent and self.characters_equal

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weights": [self.weight_first, self.weight_second],
            "weights_congruent": self.weights_congruent,
            "characters_equal": self.characters_equal,
            "expansions_agree": self.expansions_agree,
            "common_precision": self.common_precision,
            "hasse_exponent": self.hasse_exponent,
            "raised": self.raised,
            "consistent": self.consistent,
        }


def check_prop24(f: ModularForm, g: ModularForm) -> Prop24Report:
    """Weights congruent mod p-1 and equal primitive characters; t = |k-k'|/(p-1) when expansions agree."""
    if f.base != g.base:
        raise MixedMetadata("check_prop24", "forms live over different fields")
    p = f.p
    congruent = (f.weight - g.weight) % (p - 1) == 0
    agree = f.qexp.agrees_with(g.qexp)
    report = Prop24Report(
        weight_first=f.weight,
        weight_second=g.weight,
        weights_congruent=congruent,
        characters_equal=f.character.same_primitive(g.character),
        expansions_agree=agree,
        common_precision=min(f.prec, g.prec),
    )
    if agree and congruent:
        report.hasse_exponent = abs(f.weight - g.weight) // (p - 1)
        report.raised = "first" if f.weight >= g.weight else "second"
    return report


# Eigensystems

@dataclass
class EigensystemComparison(Report):
    equal: bool
    table: Dict[int, Tuple[FieldElement, FieldElement]] = field(default_factory=dict)
    divergence: Optional[Tuple[int, FieldElement, FieldElement]] = None
    bound: int = 0

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "equal": self.equal,
            "bound": self.bound,
            "primes": sorted(self.table),
        }
        for l, (a, b) in self.table.items():
            data[f"a_{l:05d}"] = [a, b]
        if self.divergence is not None:
            l, a, b = self.divergence
            data["divergence"] = [l, a, b]
        return data


def _require_eigen(f: ModularForm, bound: int, exclude: Iterable[int], operation: str) -> ModularForm:
    f = normalize(f)
    check = is_eigen_upto(f, bound, exclude)
    if not check.is_eigen:
        raise NotEigenform(operation, f"T_{check.witness.l} fails at q^{check.witness.m}", check.witness.to_dict())
    return f


def compare_eigensystems(
    f: ModularForm, g: ModularForm, bad: Iterable[int], bound: int
) -> EigensystemComparison:
    """a_l(f) = a_l(g) for primes l <= bound outside `bad`, within both precisions."""
    bad = set(bad)
    f = _require_eigen(f, bound, bad, "compare_eigensystems")
    g = _require_eigen(g, bound, bad, "compare_eigensystems")
    limit = min(bound, f.prec, g.prec)
    result = EigensystemComparison(equal=True, bound=limit)
    for l in sympy.primerange(2, limit + 1):
        if l in bad:
            continue
        a, b = f.a(l), g.a(l)
        result.table[l] = (a, b)
        if a != b:
            result.equal = False
            result.divergence = (l, a, b)
            logger.debug("compare_eigensystems: first divergence at l=%d", l)
            break
    return result


# Identities against a newform

@dataclass
class PrimeClassification:
    l: int
    case: str
    a_l: FieldElement
    b_l: FieldElement
    satisfied: bool
    readings: Dict[str, bool] = field(default_factory=dict)


@dataclass
class Cor37Report(Report):
    primes: List[PrimeClassification] = field(default_factory=list)
    precision: int = 0

    @property
    def holds(self) -> bool:
        return all(c.satisfied for c in self.primes if c.case != "unclassified")

    @property
    def violations(self) -> List[int]:
        return [c.l for c in self.primes if c.case != "unclassified" and not c.satisfied]

    def classification(self, l: int) -> PrimeClassification:
        return next(c for c in self.primes if c.l == l)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"holds": self.holds, "precision": self.precision, "violations": self.violations}
        for c in self.primes:
            value = f"{c.case}:{'ok' if c.satisfied else 'violated'}"
            if c.readings:
                value += ":" + ",".join(f"{k}={'ok' if v else 'no'}" for k, v in sorted(c.readings.items()))
            data[f"l_{c.l:05d}"] = value
        return data


def check_cor37(F: ModularForm, f: ModularForm) -> Cor37Report:
    """Classify each prime l <= precision as case i, ii or iii and test its identity.

    (i)   l does not divide Mp/N:          a_l = b_l
    (ii)  l | M/N and l | N:                a_l = 0 or a_l = b_l
    (iii) l | Mp/N and l does not divide N: a_l = 0 or a_l^2 - a_l b_l + eps(l) l^{k-1} = 0

    Case iii is evaluated with k the weight of F and with k the weight of f;
    either reading satisfies it.
    """
    M, N, p = F.level, f.level, F.p
    if M % N:
        raise LevelNotDivisible("check_cor37", f"{N} does not divide {M}", {"M": M, "N": N})
    if F.base != f.base:
        raise MixedMetadata("check_cor37", "forms live over different fields")
    prec = min(F.prec, f.prec)
    F = _require_eigen(F, prec, (), "check_cor37")
    f = _require_eigen(f, prec, (), "check_cor37")
    report = Cor37Report(precision=prec)
    quotient = M // N
    for l in sympy.primerange(2, prec + 1):
        a, b = F.a(l), f.a(l)
        if (M * p // N) % l:
            case, ok, readings = "i", a == b, {}
        elif quotient % l == 0 and N % l == 0:
            case, ok, readings = "ii", a.is_zero() or a == b, {}
        elif N % l:
            eps = f.nebentypus(l)
            readings = {
                "weight_F": (a * a - a * b + eps * F.base(l) ** (F.weight - 1)).is_zero(),
                "weight_f": (a * a - a * b + eps * F.base(l) ** (f.weight - 1)).is_zero(),
            }
            case, ok = "iii", a.is_zero() or any(readings.values())
        else:
            case, ok, readings = "unclassified", False, {}
        report.primes.append(PrimeClassification(l, case, a, b, ok, readings))
    return report


# Companion forms

@dataclass
class CompanionReport(Report):
    identity_precision: int
    comparison: Optional[List[PrimeClassification]] = None
    compared_with: Optional[str] = None

    @property
    def holds(self) -> bool:
        if self.comparison is None:
            return True
        return all(c.satisfied for c in self.comparison if c.case != "unclassified")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "identity": "n^k b_n = n a_n",
            "identity_precision": self.identity_precision,
            "holds": self.holds,
            "compared_with": self.compared_with,
        }
        for c in self.comparison or []:
            value = f"{c.case}:{'ok' if c.satisfied else 'violated'}"
            if c.readings:
                value += ":" + ",".join(f"{k}={'ok' if v else 'no'}" for k, v in sorted(c.readings.items()))
            data[f"l_{c.l:05d}"] = value
        return data


def companion_check(
    F: ModularForm,
    G: ModularForm,
    f: Optional[ModularForm] = None,
    reducible: bool = False,
) -> CompanionReport:
    """n^k b_n = n a_n for all n up to precision, then the companion identities against f.

    With f (level N, character chi) the primes l are classified as

    (i)     l does not divide Mp/N:  l^k b_l = l c_l
    (ii)    l | M/N, l not | N:      l^k b_l = 0 or l^k b_l = l c_l
    (iii)   l | M/N, l not | N:      l^k b_l = 0 or l b_l (l^{k-1} b_l - c_l) + chi(l) l = 0

    The conditions of (ii) and (iii) coincide, so both are evaluated and
    reported under the case label "ii/iii". For reducible F the comparison
    uses theta^{p-1} f instead of f.
    """
    p, k = F.p, F.weight
    if not 2 <= k <= p:
        raise HypothesisViolation("companion_check", f"weight {k} is outside [2, {p}]", {"clause": "2<=k<=p"})
    if G.weight != p + 1 - k:
        raise HypothesisViolation(
            "companion_check", f"companion weight {G.weight} != p+1-k = {p + 1 - k}", {"clause": "weight"}
        )
    if (F.level, F.base) != (G.level, G.base):
        raise MixedMetadata("companion_check", "F and G must share level and field")
    if F.prec >= p and F.a(p).is_zero():
        raise HypothesisViolation("companion_check", "F is not ordinary: a_p = 0", {"clause": "ordinary"})

    K = F.base
    prec = min(F.prec, G.prec)
    for n in range(1, prec + 1):
        lhs, rhs = K(n) ** k * G.a(n), K(n) * F.a(n)
        if lhs != rhs:
            raise IdentityFail(
                "companion_check",
                f"n^k b_n != n a_n at n={n}",
                {"witness": n, "lhs": lhs.token(), "rhs": rhs.token()},
            )
    report = CompanionReport(identity_precision=prec)
    if f is None:
        return report

    M, N = F.level, f.level
    if M % N:
        raise LevelNotDivisible("companion_check", f"{N} does not divide {M}", {"M": M, "N": N})
    c_form = theta_power(f, p - 1) if reducible else f
    report.compared_with = "theta^(p-1) f" if reducible else "f"
    report.comparison = []
    for l in sympy.primerange(2, min(prec, c_form.prec) + 1):
        b, c = G.a(l), c_form.a(l)
        L = K(l)
        lk_b = L ** k * b
        if (M * p // N) % l:
            case, ok, readings = "i", lk_b == L * c, {}
        elif (M // N) % l == 0 and N % l:
            readings = {
                "ii": lk_b.is_zero() or lk_b == L * c,
                "iii": lk_b.is_zero() or (L * b * (L ** (k - 1) * b - c) + f.nebentypus(l) * L).is_zero(),
            }
            case, ok = "ii/iii", any(readings.values())
        else:
            case, ok, readings = "unclassified", False, {}
        report.comparison.append(PrimeClassification(l, case, b, c, ok, readings))
    return report
