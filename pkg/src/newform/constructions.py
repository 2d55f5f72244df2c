"""
Explicit eigenform constructions: U_l eigenforms in <f(q), f(q^l)>, theta
twists of Katz Eisenstein series with prescribed reducible representation,
and the weight old space test against an Eisenstein series.
"""

import logging
from dataclasses import replace
from typing import Optional

import sympy

from ..characters import DirichletCharacter
from ..errors import HypothesisViolation, NotARoot, ParityViolation, PreconditionError
from ..eisenstein import ReducibleRep, katz_eisenstein
from ..gf import FieldElement
from ..qseries import ModularForm, theta_power
from .oldspace import MembershipResult, membership, weight_old_generators

logger = logging.getLogger(__name__)


def oldform_eigenform_at_l(f: ModularForm, l: int, alpha: FieldElement) -> ModularForm:
    """g = f(q) - alpha' f(q^l) at level lN, alpha + alpha' = a_l(f), alpha alpha' = eps(l) l^{k-1}.

    g is a T_l (= U_l at level lN) eigenform with eigenvalue alpha.
    """
    if not sympy.isprime(l) or (f.level * f.p) % l == 0:
        raise PreconditionError("oldform_eigenform_at_l", f"l={l} must be a prime not dividing Np")
    alpha = f.base(alpha)
    a_l = f.a(l)
    constant = f.nebentypus(l) * f.base(l) ** (f.weight - 1)
    if alpha * alpha - a_l * alpha + constant:
        raise NotARoot(
            "oldform_eigenform_at_l",
            f"{alpha.token()} is not a root of X^2 - a_{l} X + eps({l}) {l}^(k-1)",
            {"alpha": alpha.token(), "a_l": a_l.token()},
        )
    complement = a_l - alpha
    qexp = f.qexp - f.qexp.stretch(l).scale(complement)
    return f.derive(qexp, level=f.level * l)


_CASES = ("i", "ii", "iii", "iv")


def _violation(case: str, clause: str, message: str) -> HypothesisViolation:
    return HypothesisViolation("lemma45_construct", f"case {case}: {message}", {"case": case, "clause": clause})


def lemma45_construct(
    case: str,
    a: int,
    k: int,
    eps: DirichletCharacter,
    eps_prime: DirichletCharacter,
    p: int,
    prec: int,
    b: Optional[int] = None,
) -> ModularForm:
    """theta^a of the Katz Eisenstein series realizing eps' chi_p^a + eps chi_p^b.

    i    eps' != 1:                        theta^a E_k^{eps,eps'}
    ii   eps = eps' = 1, k = 2, p > 3:      theta^a E_{p^2+1}^{1,1}
    iii  eps = eps' = 1, k != 2:            theta^a E_k^{1,1}
    iv   eps != 1, eps' = 1:                theta^a E_k^{eps,1}

    In every case k - 1 = b - a mod (p - 1); b defaults to a + k - 1.
    """
    if case not in _CASES:
        raise PreconditionError("lemma45_construct", f"unknown case {case!r}; expected one of {_CASES}")
    if eps.target.p != p or eps_prime.target != eps.target:
        raise PreconditionError("lemma45_construct", f"characters must take values in one field of characteristic {p}")
    if not 0 <= a <= p - 1:
        raise _violation(case, "a", f"twist exponent {a} is outside [0, {p - 1}]")
    if not 1 <= k <= p + 1:
        raise _violation(case, "k", f"weight {k} is outside [1, {p + 1}]")
    if b is None:
        b = (a + k - 1) % (p - 1)
    elif (k - 1 - (b - a)) % (p - 1):
        raise _violation(case, "congruence", f"k-1 = {k - 1} is not b-a = {b - a} mod {p - 1}")

    trivial, trivial_prime = eps.is_trivial(), eps_prime.is_trivial()
    serre_level = eps.conductor * eps_prime.conductor
    if case != "ii" and (serre_level, k) == (1, 2):
        raise _violation(case, "exclusion", "(N(rho), k) = (1, 2) is excluded")
    weight = k
    if case == "i":
        if trivial_prime:
            raise _violation(case, "eps_prime", "eps' must be nontrivial")
    elif case == "ii":
        if not (trivial and trivial_prime):
            raise _violation(case, "characters", "both characters must be trivial")
        if k != 2:
            raise _violation(case, "k", "weight must be 2")
        if p in (2, 3):
            raise _violation(case, "p", "p must not be 2 or 3")
        weight = p * p + 1
    elif case == "iii":
        if not (trivial and trivial_prime):
            raise _violation(case, "characters", "both characters must be trivial")
        if k == 2:
            raise _violation(case, "k", "weight must not be 2")
    else:
        if trivial or not trivial_prime:
            raise _violation(case, "characters", "eps must be nontrivial and eps' trivial")

    try:
        eisenstein = katz_eisenstein(weight, eps, eps_prime, 1, p, prec)
    except ParityViolation as exc:
        raise _violation(case, "parity", exc.message) from exc

    g = theta_power(eisenstein, a)
    rep = ReducibleRep(eps=eps, eps_prime=eps_prime, a=a, b=b, level=eisenstein.level)
    logger.debug("lemma45_construct: case %s, a=%d, weight %d -> %d", case, a, weight, g.weight)
    return replace(g, rep=rep)


def eisenstein_weight_old_check(
    F: ModularForm, b: int, eps: DirichletCharacter, eps_prime: DirichletCharacter
) -> MembershipResult:
    """Membership of F in the weight old space of E_{b+1}^{eps,eps'} in the weight of F."""
    f = katz_eisenstein(b + 1, eps, eps_prime, 1, F.p, F.prec)
    return membership(F, weight_old_generators(f, F.weight))
