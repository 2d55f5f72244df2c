"""
Newform package initialization.
"""

from .checks import (
    CompanionReport,
    Cor37Report,
    EigensystemComparison,
    PrimeClassification,
    Prop24Report,
    check_cor37,
    check_prop24,
    companion_check,
    compare_eigensystems,
)
from .constructions import eisenstein_weight_old_check, lemma45_construct, oldform_eigenform_at_l
from .decomposition import HeckeConsistency, Theorem13Certificate, theorem13_decompose
from .killing import lemma31_kill
from .oldspace import (
    GeneratorLabel,
    MembershipResult,
    OldSpaceBasis,
    Verdict,
    admissible_frobenius_counts,
    combined_old_generators,
    level_old_generators,
    membership,
    recommended_precision,
    weight_old_generators,
)
from .theta_kernel import theta_kernel_decompose

__all__ = [
    # Old spaces
    "GeneratorLabel",
    "OldSpaceBasis",
    "admissible_frobenius_counts",
    "weight_old_generators",
    "level_old_generators",
    "combined_old_generators",
    "recommended_precision",
    "membership",
    "MembershipResult",
    "Verdict",

    # Constructions
    "lemma31_kill",
    "theta_kernel_decompose",
    "oldform_eigenform_at_l",
    "lemma45_construct",
    "eisenstein_weight_old_check",
    "theorem13_decompose",
    "Theorem13Certificate",
    "HeckeConsistency",

    # Checks
    "check_prop24",
    "Prop24Report",
    "compare_eigensystems",
    "EigensystemComparison",
    "check_cor37",
    "Cor37Report",
    "PrimeClassification",
    "companion_check",
    "CompanionReport",
]
