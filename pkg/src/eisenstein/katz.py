"""
Katz Eisenstein series: mod-p reductions of the exact series.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List

from ..characters import DirichletCharacter, char_lift, gen_bernoulli, p_integral_check
from ..errors import CharacteristicDividesLevel, FieldMismatch, NotPIntegral
from ..qseries import ModularForm, NORMALIZED
from .representation import ReducibleRep
from .series import CycloExpansion, EisensteinSpec, eisenstein_qexp

logger = logging.getLogger(__name__)


def katz_eisenstein(
    k: int,
    eps: DirichletCharacter,
    eps_prime: DirichletCharacter,
    t: int,
    p: int,
    prec: int,
) -> ModularForm:
    """The reduction of E_k^{eps,eps'} (eps on d^{k-1}) as a form of level t*u*v.

    The nebentypus is eps*eps' extended to the level, and the attached
    representation is eps' + eps chi_p^{k-1}.
    """
    target = eps.target
    if target.p != p or eps_prime.target != target:
        raise FieldMismatch("katz_eisenstein", f"characters must take values in one field of characteristic {p}")
    lift1, reduction = char_lift(eps)
    lift2, _ = char_lift(eps_prime)
    spec = EisensteinSpec(k, lift1, lift2, t)
    if spec.level % p == 0:
        raise CharacteristicDividesLevel(
            "katz_eisenstein", f"p={p} divides the level {spec.level}", {"level": spec.level}
        )
    c0 = spec.constant_term()
    if spec.v == 1 and not p_integral_check(c0, p):
        raise NotPIntegral(
            "katz_eisenstein",
            f"p={p} divides the denominator of B_{k}^eps/2k = {c0.token()}",
            {"k": k, "p": p, "c0": c0.token()},
        )
    exact = eisenstein_qexp(spec, prec)
    qexp = exact.reduce(reduction)
    character = (spec.chi1.base * spec.chi2.base).extend(spec.level)
    flags = {NORMALIZED} if prec >= 1 and qexp.coeffs[1] == 1 else set()
    form = ModularForm(qexp, spec.level, k, character, frozenset(flags))
    rep = ReducibleRep(
        eps=spec.chi1.base,
        eps_prime=spec.chi2.base,
        a=0,
        b=k - 1,
        level=spec.level,
    )
    logger.debug("katz_eisenstein: k=%d level=%d p=%d c0=%s", k, spec.level, p, qexp.coeffs[0].token())
    return replace(form, rep=rep)


def exact_eisenstein(
    k: int, eps: DirichletCharacter, eps_prime: DirichletCharacter, t: int, prec: int
) -> CycloExpansion:
    """The unreduced E_k^{eps,eps'}(q^t) over the cyclotomic lifts of the characters."""
    lift1, _ = char_lift(eps)
    lift2, _ = char_lift(eps_prime)
    return eisenstein_qexp(EisensteinSpec(k, lift1, lift2, t), prec)


@dataclass
class NewEisensteinCheck:
    """Conditions under which E_k^{eps,eps'} is a new Eisenstein series of level cond(eps)cond(eps')."""
    weight_in_range: bool
    not_e2: bool
    p_integral: bool
    level: int
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.weight_in_range and self.not_e2 and self.p_integral

    def failed(self) -> List[str]:
        names = ("weight_in_range", "not_e2", "p_integral")
        return [name for name in names if not getattr(self, name)]


def is_new_eisenstein_candidate(
    k: int, eps: DirichletCharacter, eps_prime: DirichletCharacter, p: int
) -> NewEisensteinCheck:
    """1 <= k <= p-1, (k, eps, eps') != (2, 1, 1), and the Bernoulli denominator condition."""
    lift1, _ = char_lift(eps.primitive())
    lift2, _ = char_lift(eps_prime.primitive())
    trivial_pair = lift1.is_trivial() and lift2.is_trivial()
    p_integral = True
    details = {}
    if lift2.conductor == 1 and k >= 1:
        c0 = gen_bernoulli(k, lift1) / (-2 * k)
        p_integral = p_integral_check(c0, p)
        details["c0"] = c0.token()
    return NewEisensteinCheck(
        weight_in_range=1 <= k <= p - 1,
        not_e2=not (k == 2 and trivial_pair),
        p_integral=p_integral,
        level=lift1.conductor * lift2.conductor,
        details=details,
    )
