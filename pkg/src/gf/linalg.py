"""
Linear systems over a finite field.

Equations are fed one at a time (in the order of the q-expansion exponent they
come from), so the first equation that makes the system inconsistent is known
exactly and serves as the witness of a failed membership.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .field import FieldElement, FiniteField

logger = logging.getLogger(__name__)


@dataclass
class SolveResult:
    """Outcome of solving a linear system."""
    consistent: bool
    solution: Optional[List[FieldElement]]
    rank: int
    witness: Optional[int] = None


@dataclass
class IncrementalSystem:
    """Row-echelon accumulator for A x = b over a finite field."""
    base: FiniteField
    ncols: int
    _pivots: Dict[int, Tuple[List[FieldElement], FieldElement]] = field(default_factory=dict)
    _rows: List[Tuple[List[FieldElement], FieldElement]] = field(default_factory=list)
    witness: Optional[int] = None

    def add_equation(self, row: Sequence[FieldElement], rhs: FieldElement, tag: int = -1) -> bool:
        """Add one equation; returns False once the system is inconsistent."""
        self._rows.append((list(row), rhs))
        if self.witness is not None:
            return False
        row, rhs = list(row), rhs
        for col, (prow, prhs) in self._pivots.items():
            c = row[col]
            if c:
                row = [a - c * b for a, b in zip(row, prow)]
                rhs = rhs - c * prhs
        lead = next((i for i, a in enumerate(row) if a), None)
        if lead is None:
            if rhs:
                self.witness = tag
                return False
            return True
        inv = row[lead].inverse()
        row = [a * inv for a in row]
        rhs = rhs * inv
        for col, (prow, prhs) in list(self._pivots.items()):
            c = prow[lead]
            if c:
                self._pivots[col] = ([a - c * b for a, b in zip(prow, row)], prhs - c * rhs)
        self._pivots[lead] = (row, rhs)
        return True

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def solve(self) -> SolveResult:
        if self.witness is not None:
            return SolveResult(False, None, self.rank, self.witness)
        solution = least_index_solution(self.base, self.ncols, self._rows)
        return SolveResult(True, solution, self.rank)

    def nullspace(self) -> List[List[FieldElement]]:
        """Basis of the homogeneous solutions, one vector per free column."""
        return nullspace_basis(self.base, self.ncols, [row for row, _ in self._rows])


def _reduced_echelon(
    ncols: int, matrix: List[List[FieldElement]]
) -> Tuple[List[List[FieldElement]], List[int]]:
    """Reduced row echelon form of the first ncols columns, in place."""
    pivot_row = 0
    pivot_cols: List[int] = []
    for col in range(ncols):
        found = next((i for i in range(pivot_row, len(matrix)) if matrix[i][col]), None)
        if found is None:
            continue
        matrix[pivot_row], matrix[found] = matrix[found], matrix[pivot_row]
        inv = matrix[pivot_row][col].inverse()
        matrix[pivot_row] = [a * inv for a in matrix[pivot_row]]
        for i in range(len(matrix)):
            if i != pivot_row and matrix[i][col]:
                c = matrix[i][col]
                matrix[i] = [a - c * b for a, b in zip(matrix[i], matrix[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
    return matrix, pivot_cols


def least_index_solution(
    base: FiniteField,
    ncols: int,
    rows: Sequence[Tuple[Sequence[FieldElement], FieldElement]],
) -> List[FieldElement]:
    """Solution of a consistent system supported on the earliest independent columns.

    Reduced row echelon form over the augmented matrix; free variables are 0.
    """
    matrix, pivot_cols = _reduced_echelon(ncols, [list(r) + [b] for r, b in rows])
    solution = [base.zero()] * ncols
    for i, col in enumerate(pivot_cols):
        solution[col] = matrix[i][ncols]
    logger.debug("least_index_solution: rank %d of %d columns", len(pivot_cols), ncols)
    return solution


def nullspace_basis(
    base: FiniteField, ncols: int, rows: Sequence[Sequence[FieldElement]]
) -> List[List[FieldElement]]:
    """Kernel basis of a matrix: free column set to 1, other free columns to 0."""
    matrix, pivot_cols = _reduced_echelon(ncols, [list(r) for r in rows])
    basis = []
    for free in (c for c in range(ncols) if c not in pivot_cols):
        vector = [base.zero()] * ncols
        vector[free] = base.one()
        for i, col in enumerate(pivot_cols):
            vector[col] = -matrix[i][free]
        basis.append(vector)
    return basis
