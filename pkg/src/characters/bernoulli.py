"""
Generalized Bernoulli numbers of lifted characters.

B_k^eps is k! times the x^k coefficient of

    sum_{j=1}^{n} eps(j) x e^{jx} / (e^{nx} - 1)

with n the conductor. After cancelling the simple zero of the denominator the
series quotient is

    (sum_i S_i x^i) / (sum_i n^{i+1} x^i / (i+1)!),   S_i = sum_j eps(j) j^i / i!

which only needs rational scalings of cyclotomic values.
"""

import logging
from fractions import Fraction
from math import factorial

from .cyclotomic import CycloRational
from .lift import LiftedCharacter

logger = logging.getLogger(__name__)


def gen_bernoulli(k: int, character: LiftedCharacter) -> CycloRational:
    """B_k^eps, evaluated with the primitive character (n = conductor)."""
    if k < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {k}")
    if character.conductor != character.modulus:
        logger.warning(
            "gen_bernoulli: character mod %d is imprimitive; using its primitive form mod %d",
            character.modulus,
            character.conductor,
        )
        character = character.primitive()
    n = character.modulus
    order = character.order
    values = [character(j) for j in range(1, n + 1)]

    numerator = []
    for i in range(k + 1):
        s = CycloRational.rational(0, order)
        for j, value in enumerate(values, start=1):
            if not value.is_zero():
                s = s + value * Fraction(j ** i, factorial(i))
        numerator.append(s)
    denominator = [Fraction(n ** (i + 1), factorial(i + 1)) for i in range(k + 1)]

    quotient = []
    for i in range(k + 1):
        acc = numerator[i]
        for t in range(1, i + 1):
            acc = acc - quotient[i - t] * denominator[t]
        quotient.append(acc / denominator[0])
    return quotient[k] * factorial(k)


def p_integral_check(value: CycloRational, p: int) -> bool:
    """True iff no reduced coordinate denominator is divisible by p."""
    return all(c.denominator % p for c in value.coords)
