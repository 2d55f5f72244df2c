"""
Exact arithmetic in cyclotomic fields Q(zeta_n) = Q[x]/Phi_n(x).

Elements keep phi(n) rational coordinates in the power basis
1, zeta, ..., zeta^{phi(n)-1}. Values from different cyclotomic fields are
combined in Q(zeta_lcm).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Tuple, Union

import sympy

from ..errors import ParseError

Rational = Union[int, Fraction]

_X = sympy.Symbol("x")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Phi_n as low-to-high integer coefficients."""
    coeffs = sympy.Poly(sympy.cyclotomic_poly(n, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(coeffs: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(deg):
                coeffs[i - deg + j] -= c * phi[j]
        coeffs[i] = Fraction(0)
    coeffs = coeffs[:deg] + [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs)


class CycloRational:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Sequence[Rational]):
        self.n = n
        self.coords = _reduce([Fraction(c) for c in coords], n)

    @classmethod
    def rational(cls, value: Rational, n: int = 1) -> "CycloRational":
        return cls(n, [value])

    @classmethod
    def zeta_power(cls, n: int, e: int) -> "CycloRational":
        coords = [0] * (e % n) + [1]
        return cls(n, coords)

    @property
    def degree(self) -> int:
        return len(self.coords)

    def to_order(self, m: int) -> "CycloRational":
        """Image in Q(zeta_m) for n | m, via zeta_n = zeta_m^{m/n}."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"Q(zeta_{self.n}) does not embed in Q(zeta_{m})")
        step = m // self.n
        coeffs = [Fraction(0)] * (step * max(len(self.coords) - 1, 0) + 1)
        for i, c in enumerate(self.coords):
            coeffs[i * step] = c
        return CycloRational(m, coeffs)

    def _common(self, other) -> Tuple["CycloRational", "CycloRational"]:
        if isinstance(other, (int, Fraction)):
            other = CycloRational.rational(other, self.n)
        if not isinstance(other, CycloRational):
            raise TypeError(f"cannot combine CycloRational with {type(other).__name__}")
        m = _lcm(self.n, other.n)
        return self.to_order(m), other.to_order(m)

    def __add__(self, other) -> "CycloRational":
        a, b = self._common(other)
        return CycloRational(a.n, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self) -> "CycloRational":
        return CycloRational(self.n, [-x for x in self.coords])

    def __sub__(self, other) -> "CycloRational":
        a, b = self._common(other)
        return CycloRational(a.n, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other) -> "CycloRational":
        return (-self) + other

    def __mul__(self, other) -> "CycloRational":
        if isinstance(other, (int, Fraction)):
            return CycloRational(self.n, [x * other for x in self.coords])
        a, b = self._common(other)
        product = [Fraction(0)] * (len(a.coords) + len(b.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    product[i + j] += x * y
        return CycloRational(a.n, product)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "CycloRational":
        if not isinstance(other, (int, Fraction)):
            raise TypeError("CycloRational division is only by rationals")
        return CycloRational(self.n, [x / other for x in self.coords])

    def __pow__(self, e: int) -> "CycloRational":
        result = CycloRational.rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloRational)):
            a, b = self._common(other)
            return a.coords == b.coords
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.n, self.coords))

    def __repr__(self) -> str:
        return self.token()

    def token(self) -> str:
        body = ", ".join(f"{c.numerator}/{c.denominator}" for c in self.coords)
        return f"cyc({self.n}; {body})"


def parse_cyclo(token: str) -> CycloRational:
    """Parse cyc(n; q_0, q_1, ...)."""
    token = token.strip()
    if not (token.startswith("cyc(") and token.endswith(")")):
        raise ParseError("parse_cyclo", f"bad cyclotomic token {token!r}")
    head, _, body = token[4:-1].partition(";")
    coords = [Fraction(part.strip()) for part in body.split(",") if part.strip()]
    return CycloRational(int(head), coords)
