"""
q-expansion package initialization.
"""

from .expansion import QExpansion, linear_combination
from .fileformat import parse_form, read_form, serialize_form, write_form
from .form import (
    ASSERTED_MINIMAL_WEIGHT,
    ASSERTED_NEWFORM,
    CUSPIDAL,
    NORMALIZED,
    ModularForm,
    make_form,
)
from .operators import (
    EigenCheck,
    FailureWitness,
    degeneracy_Bd,
    diamond,
    divide_exponents,
    frobenius,
    hasse_mult,
    hecke_Tn,
    is_eigen_upto,
    normalize,
    theta,
    theta_power,
)
from .words import WeightWord, enumerate_words

__all__ = [
    # Data
    "QExpansion",
    "ModularForm",
    "make_form",
    "linear_combination",
    "CUSPIDAL",
    "NORMALIZED",
    "ASSERTED_NEWFORM",
    "ASSERTED_MINIMAL_WEIGHT",

    # Operators
    "hecke_Tn",
    "diamond",
    "theta",
    "theta_power",
    "hasse_mult",
    "frobenius",
    "degeneracy_Bd",
    "divide_exponents",
    "normalize",
    "is_eigen_upto",
    "EigenCheck",
    "FailureWitness",

    # Weight words
    "WeightWord",
    "enumerate_words",

    # Files
    "serialize_form",
    "parse_form",
    "read_form",
    "write_form",
]
