"""
Killing the coefficients of an eigenform at a set of primes dividing its level.
"""

import logging
from typing import Iterable

import sympy

from ..errors import NotEigenform, SNotDividingLevel
from ..qseries import ModularForm, is_eigen_upto, normalize

logger = logging.getLogger(__name__)


def lemma31_kill(f: ModularForm, primes: Iterable[int]) -> ModularForm:
    """f~ = prod_{l in S} (1 - a_l(f) B_l) f at level N prod_{l in S} l.

    For a single prime this is f - a_l(f) f(q^l). The product keeps the
    eigenform property, gives a_{l^m}(f~) = 0 for l in S and leaves a_l
    unchanged for l outside S. The output is known to prec(f).
    """
    primes = sorted(set(primes))
    bad = [l for l in primes if not sympy.isprime(l) or f.level % l]
    if bad:
        raise SNotDividingLevel(
            "lemma31_kill", f"{bad} are not prime divisors of the level {f.level}", {"primes": bad}
        )
    f = normalize(f)
    check = is_eigen_upto(f, f.prec)
    if not check.is_eigen:
        w = check.witness
        raise NotEigenform(
            "lemma31_kill",
            f"T_{w.l} f != a_{w.l} f at q^{w.m}",
            w.to_dict(),
        )
    eigenvalues = {l: f.a(l) for l in primes if l <= f.prec}
    result = f
    for l in primes:
        a_l = eigenvalues.get(l, f.base.zero())
        level = result.level * l
        stretched = result.qexp.stretch(l)
        qexp = result.qexp - stretched.scale(a_l)
        result = result.derive(qexp, level=level)
    logger.debug("lemma31_kill: S=%s, level %d -> %d", primes, f.level, result.level)
    return result
