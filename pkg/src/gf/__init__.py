"""
Finite field package initialization.
"""

from .field import (
    FieldElement,
    FiniteField,
    embed,
    field_arith,
    is_irreducible,
    make_field,
    nth_root_of_unity,
    parse_element,
    parse_field,
    quadratic_roots,
)
from .linalg import IncrementalSystem, SolveResult, least_index_solution, nullspace_basis

__all__ = [
    # Fields
    "FiniteField",
    "FieldElement",
    "make_field",
    "field_arith",
    "nth_root_of_unity",
    "embed",
    "is_irreducible",
    "quadratic_roots",
    "parse_field",
    "parse_element",

    # Linear algebra
    "IncrementalSystem",
    "SolveResult",
    "least_index_solution",
    "nullspace_basis",
]
