"""
Eisenstein series package initialization.
"""

from .katz import NewEisensteinCheck, exact_eisenstein, is_new_eisenstein_candidate, katz_eisenstein
from .representation import RepEquivalence, ReducibleRep, rep_equiv, rep_trace_det
from .series import CycloExpansion, EisensteinSpec, divisor_sum, eisenstein_qexp

__all__ = [
    # Exact series
    "EisensteinSpec",
    "CycloExpansion",
    "eisenstein_qexp",
    "divisor_sum",

    # Reductions
    "katz_eisenstein",
    "exact_eisenstein",
    "is_new_eisenstein_candidate",
    "NewEisensteinCheck",

    # Representations
    "ReducibleRep",
    "RepEquivalence",
    "rep_trace_det",
    "rep_equiv",
]
