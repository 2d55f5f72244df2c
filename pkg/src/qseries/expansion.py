"""
Truncated q-expansions over a finite field.

A QExpansion knows a_0, ..., a_B exactly (B = prec). Binary operations work on
the common known range, so the result precision is the minimum of the inputs.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..errors import FieldMismatch, PrecisionUnderflow
from ..gf import FieldElement, FiniteField, embed

Scalar = Union[int, FieldElement]


@dataclass(frozen=True)
class QExpansion:
    """Coefficients a_0..a_prec of a q-series over `base`."""
    base: FiniteField
    prec: int
    coeffs: Tuple[FieldElement, ...]

    def __post_init__(self):
        if self.prec < 0:
            raise PrecisionUnderflow("qexpansion", f"negative precision {self.prec}")
        if len(self.coeffs) != self.prec + 1:
            raise ValueError(f"expected {self.prec + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coefficients(cls, base: FiniteField, values: Sequence[Scalar], prec: Optional[int] = None) -> "QExpansion":
        """Build from a list a_0, a_1, ...; missing entries up to prec are zero."""
        prec = len(values) - 1 if prec is None else prec
        coeffs = [base(v) for v in values[: prec + 1]]
        coeffs += [base.zero()] * (prec + 1 - len(coeffs))
        return cls(base, prec, tuple(coeffs))

    @classmethod
    def from_dict(cls, base: FiniteField, values: Dict[int, Scalar], prec: int) -> "QExpansion":
        coeffs = [base.zero()] * (prec + 1)
        for n, v in values.items():
            if 0 <= n <= prec:
                coeffs[n] = base(v)
        return cls(base, prec, tuple(coeffs))

    @classmethod
    def zero(cls, base: FiniteField, prec: int) -> "QExpansion":
        return cls(base, prec, (base.zero(),) * (prec + 1))

    def __getitem__(self, n: int) -> FieldElement:
        if n < 0 or n > self.prec:
            raise PrecisionUnderflow("coefficient", f"a_{n} is beyond precision {self.prec}", {"n": n})
        return self.coeffs[n]

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.coeffs)

    def support(self) -> List[int]:
        return [n for n, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_nonzero(self) -> Optional[int]:
        return next((n for n, c in enumerate(self.coeffs) if c), None)

    def truncate(self, prec: int) -> "QExpansion":
        if prec > self.prec:
            raise PrecisionUnderflow("truncate", f"cannot raise precision {self.prec} to {prec}")
        return QExpansion(self.base, prec, self.coeffs[: prec + 1])

    def _check(self, other: "QExpansion", op: str) -> int:
        if other.base != self.base:
            raise FieldMismatch(op, f"{self.base.descriptor()} vs {other.base.descriptor()}")
        return min(self.prec, other.prec)

    def __add__(self, other: "QExpansion") -> "QExpansion":
        prec = self._check(other, "add")
        return QExpansion(self.base, prec, tuple(a + b for a, b in zip(self.coeffs[: prec + 1], other.coeffs)))

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        prec = self._check(other, "sub")
        return QExpansion(self.base, prec, tuple(a - b for a, b in zip(self.coeffs[: prec + 1], other.coeffs)))

    def __neg__(self) -> "QExpansion":
        return QExpansion(self.base, self.prec, tuple(-a for a in self.coeffs))

    def scale(self, c: Scalar) -> "QExpansion":
        c = self.base(c)
        return QExpansion(self.base, self.prec, tuple(c * a for a in self.coeffs))

    def agrees_with(self, other: "QExpansion") -> bool:
        """Equality on the common known range."""
        prec = self._check(other, "compare")
        return self.coeffs[: prec + 1] == other.coeffs[: prec + 1]

    def first_difference(self, other: "QExpansion") -> Optional[int]:
        prec = self._check(other, "compare")
        return next((n for n in range(prec + 1) if self.coeffs[n] != other.coeffs[n]), None)

    def stretch(self, d: int) -> "QExpansion":
        """f(q^d), known up to d*prec."""
        prec = d * self.prec
        coeffs = [self.base.zero()] * (prec + 1)
        for m, c in enumerate(self.coeffs):
            coeffs[d * m] = c
        return QExpansion(self.base, prec, tuple(coeffs))

    def change_ring(self, target: FiniteField) -> "QExpansion":
        return QExpansion(target, self.prec, tuple(embed(c, target) for c in self.coeffs))

    def to_dict(self) -> Dict[int, FieldElement]:
        return {n: c for n, c in enumerate(self.coeffs) if c}


def linear_combination(terms: Iterable[Tuple[Scalar, QExpansion]]) -> QExpansion:
    """sum c_i f_i on the common precision."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty linear combination")
    base = terms[0][1].base
    prec = min(f.prec for _, f in terms)
    total = QExpansion.zero(base, prec)
    for c, f in terms:
        total = total + f.truncate(prec).scale(c)
    return total
