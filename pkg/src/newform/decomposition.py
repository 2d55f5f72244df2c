"""
Two-stage decomposition of a form into old space data of a newform.

Stage 1 writes F in the combined old space of f as sum_{j,d} c_{j,d} f(q^{d p^j})
and factors the coefficient table as c_{j,d} = beta_j gamma_d. This yields
F1 = sum_j beta_j A^{m_j} Frob^j f at the level of f. Stage 2 recovers
F = sum_d gamma_d B_d F1 by a level old space membership.
"""

import logging
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Any, Dict, List, Optional

from ..config.settings import get_global_settings
from ..errors import HypothesisViolation, LevelNotDivisible, NotNormalizable, Stage1Fail, Stage2Fail
from ..gf import FieldElement, FiniteField
from ..qseries import ModularForm, degeneracy_Bd, linear_combination
from ..reporting import Report
from .oldspace import (
    MembershipResult,
    Verdict,
    admissible_frobenius_counts,
    combined_old_generators,
    level_old_generators,
    membership,
    weight_old_generators,
)

logger = logging.getLogger(__name__)


@dataclass
class HeckeConsistency:
    """Whether F1 behaves like a T_p eigenform on its known coefficients."""
    multiplicative: bool = True
    recursion: bool = True
    witness: Optional[int] = None


@dataclass
class Theorem13Certificate(Report):
    level: int
    beta: Dict[int, FieldElement]
    gamma: Dict[int, FieldElement]
    F1: ModularForm
    stage1: MembershipResult
    stage2: MembershipResult
    hecke: HeckeConsistency = field(default_factory=HeckeConsistency)

    @property
    def certified_precision(self) -> int:
        return min(self.stage1.certified_precision, self.stage2.certified_precision)

    @property
    def inconclusive(self) -> bool:
        return Verdict.INCONCLUSIVE in (self.stage1.verdict, self.stage2.verdict)

    def reconstruct(self) -> ModularForm:
        """sum_d gamma_d B_d F1 at the level of the decomposed form."""
        terms = [(c, degeneracy_Bd(self.F1, d, self.level).qexp) for d, c in sorted(self.gamma.items())]
        return self.F1.derive(linear_combination(terms), level=self.level)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "stage1": self.stage1.label,
            "stage2": self.stage2.label,
            "certified_precision": self.certified_precision,
            "recommended_precision": self.stage2.recommended_precision,
            "F1_weight": self.F1.weight,
            "F1_level": self.F1.level,
            "tp_multiplicative": self.hecke.multiplicative,
            "tp_recursion": self.hecke.recursion,
            "tp_witness": self.hecke.witness,
        }
        for j, b in sorted(self.beta.items()):
            data[f"beta_j{j:03d}"] = b
        for d, g in sorted(self.gamma.items()):
            data[f"gamma_d{d:05d}"] = g
        return data


def _factor_rank_one(coefficients: Dict, js: List[int], ds: List[int]):
    """c_{j,d} = beta_j gamma_d with beta normalized to 1 at the first nonzero row."""
    pivot = next(((j, d) for j in js for d in ds if coefficients[(j, d)]), None)
    if pivot is None:
        return None
    j0, d0 = pivot
    gamma = {d: coefficients[(j0, d)] for d in ds}
    beta = {j: coefficients[(j, d0)] / coefficients[pivot] for j in js}
    for j in js:
        for d in ds:
            if coefficients[(j, d)] != beta[j] * gamma[d]:
                return None
    return beta, gamma


def _hecke_consistency(F1: ModularForm) -> HeckeConsistency:
    # a_1 a_{pm} = a_p a_m is the scale-free form of a_{pm} = a_p a_m
    p, K = F1.p, F1.base
    result = HeckeConsistency()
    if F1.prec < p:
        return result
    a1, ap = F1.a(1), F1.a(p)
    for m in range(1, F1.prec // p + 1):
        if a1 * F1.a(p * m) != ap * F1.a(m):
            result.multiplicative = False
            result.witness = p * m
            break
    constant = F1.nebentypus(p) * (K(p) ** (F1.weight - 1) if F1.weight > 1 else K.one())
    power = p
    while power * p <= F1.prec:
        lhs = a1 * F1.a(power * p)
        rhs = ap * F1.a(power) - constant * a1 * F1.a(power // p)
        if lhs != rhs:
            result.recursion = False
            if result.witness is None:
                result.witness = power * p
            break
        power *= p
    return result


def _rank_one_solution(stage1: MembershipResult, base: FiniteField):
    """A solution of the stage 1 system whose coefficient table has rank one.

    The least-index solution is tried first. When the generators are dependent
    to the available precision, solution + sum t_i v_i is searched over the kernel.
    """
    js = sorted({label.j for label in stage1.labels})
    ds = sorted({label.d for label in stage1.labels})

    def factor(solution):
        table = {(label.j, label.d): c for label, c in zip(stage1.labels, solution)}
        return _factor_rank_one(table, js, ds)

    factors = factor(stage1.coefficients)
    if factors is not None or not stage1.kernel:
        return stage1.coefficients, factors
    size = base.order ** len(stage1.kernel)
    if size > get_global_settings().root_search_limit:
        logger.warning("theorem13_decompose: kernel search of %d candidates exceeds the limit", size)
        return stage1.coefficients, None
    logger.debug("theorem13_decompose: searching %d kernel translates", size)
    for ts in product(list(base.elements()), repeat=len(stage1.kernel)):
        solution = list(stage1.coefficients)
        for t, vector in zip(ts, stage1.kernel):
            if t:
                solution = [a + t * v for a, v in zip(solution, vector)]
        factors = factor(solution)
        if factors is not None:
            return solution, factors
    return stage1.coefficients, None


def theorem13_decompose(F: ModularForm, f: ModularForm) -> Theorem13Certificate:
    """Recover F1 and the level coefficients gamma_d with F = sum_d gamma_d B_d F1."""
    M, N = F.level, f.level
    if M % N:
        raise LevelNotDivisible("theorem13_decompose", f"{N} does not divide {M}", {"M": M, "N": N})
    if F.qexp.is_zero():
        raise NotNormalizable("theorem13_decompose", "F is zero to its precision")
    if not admissible_frobenius_counts(f.weight, F.weight, F.p):
        raise HypothesisViolation(
            "theorem13_decompose",
            f"no Frobenius count reaches weight {F.weight} from weight {f.weight}",
            {"clause": "weight"},
        )

    combined = combined_old_generators(f, M, F.weight)
    stage1 = membership(F, combined)
    if stage1.verdict is Verdict.NON_MEMBER:
        raise Stage1Fail(
            "theorem13_decompose",
            f"F is not in the combined old space of f (first failure at q^{stage1.witness})",
            {"witness": stage1.witness, "rank": stage1.rank},
        )
    solution, factors = _rank_one_solution(stage1, F.base)
    if factors is None:
        raise Stage1Fail(
            "theorem13_decompose",
            "coefficient table is not a product beta_j gamma_d",
            {"generators": [str(label) for label in stage1.labels], "kernel_dimension": len(stage1.kernel)},
        )
    if stage1.kernel:
        # the table is one of several; only the common precision certifies it
        stage1 = replace(stage1, coefficients=solution, verdict=Verdict.INCONCLUSIVE)
    beta, _ = factors
    logger.debug("theorem13_decompose: beta=%s", {j: b.token() for j, b in beta.items()})

    weight_basis = weight_old_generators(f, F.weight)
    F1 = weight_basis.combination([beta[label.j] for label in weight_basis.labels])
    hecke = _hecke_consistency(F1)
    if not (hecke.multiplicative and hecke.recursion):
        logger.info("theorem13_decompose: F1 is not a T_p eigenform (witness q^%s)", hecke.witness)

    stage2 = membership(F, level_old_generators(F1, M))
    if stage2.verdict is Verdict.NON_MEMBER:
        raise Stage2Fail(
            "theorem13_decompose",
            f"F is not in the level old space of F1 (first failure at q^{stage2.witness})",
            {"witness": stage2.witness, "rank": stage2.rank},
        )
    gamma = {label.d: c for label, c in stage2.coefficient_map().items()}
    return Theorem13Certificate(level=M, beta=beta, gamma=gamma, F1=F1, stage1=stage1, stage2=stage2, hecke=hecke)
