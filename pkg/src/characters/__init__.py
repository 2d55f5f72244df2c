"""
Characters package initialization.
"""

from .bernoulli import gen_bernoulli, p_integral_check
from .cyclotomic import CycloRational, cyclotomic_polynomial, parse_cyclo
from .dirichlet import (
    DirichletCharacter,
    UnitGroup,
    char_eval,
    char_make,
    parse_character,
    trivial_character,
    unit_group,
)
from .lift import LiftedCharacter, ReductionMap, char_lift

__all__ = [
    # Cyclotomic numbers
    "CycloRational",
    "cyclotomic_polynomial",
    "parse_cyclo",

    # Dirichlet characters
    "DirichletCharacter",
    "UnitGroup",
    "unit_group",
    "char_make",
    "char_eval",
    "trivial_character",
    "parse_character",

    # Lifts and Bernoulli numbers
    "LiftedCharacter",
    "ReductionMap",
    "char_lift",
    "gen_bernoulli",
    "p_integral_check",
]
