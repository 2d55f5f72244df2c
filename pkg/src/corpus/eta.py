"""
Integer q-expansions of eta products and classical Eisenstein series.

Everything here is exact integer arithmetic; reduction mod p happens in the
loader.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from ..errors import PreconditionError


def euler_product(prec: int) -> List[int]:
    """prod_{n >= 1} (1 - q^n) to q^prec by the pentagonal number theorem."""
    coeffs = [0] * (prec + 1)
    coeffs[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= prec:
        sign = -1 if k % 2 else 1
        for exponent in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if exponent <= prec:
                coeffs[exponent] += sign
        k += 1
    return coeffs


def series_power(h: Sequence[int], r: int, prec: int) -> List[int]:
    """h^r to q^prec for an integer series with h_0 = 1.

    Uses g' h = r g h', i.e. n g_n = sum_{k=1}^{n} ((r + 1) k - n) h_k g_{n-k};
    only the nonzero h_k contribute.
    """
    if not h or h[0] != 1:
        raise PreconditionError("series_power", "constant term must be 1")
    support = [(k, h[k]) for k in range(1, min(len(h) - 1, prec) + 1) if h[k]]
    g = [0] * (prec + 1)
    g[0] = 1
    for n in range(1, prec + 1):
        total = 0
        for k, hk in support:
            if k > n:
                break
            total += ((r + 1) * k - n) * hk * g[n - k]
        value, remainder = divmod(total, n)
        assert remainder == 0
        g[n] = value
    return g


def stretch(coeffs: Sequence[int], d: int, prec: int) -> List[int]:
    out = [0] * (prec + 1)
    for n, c in enumerate(coeffs):
        if n * d > prec:
            break
        out[n * d] = c
    return out


def multiply(a: Sequence[int], b: Sequence[int], prec: int) -> List[int]:
    out = [0] * (prec + 1)
    for i, x in enumerate(a[: prec + 1]):
        if x:
            for j, y in enumerate(b[: prec + 1 - i]):
                out[i + j] += x * y
    return out


def eta_product(factors: Sequence[Tuple[int, int]], prec: int) -> List[int]:
    """prod_delta eta(delta tau)^{r_delta} as an integer q-series to q^prec.

    The leading power q^{sum r_delta delta / 24} must be integral.
    """
    shift = Fraction(sum(delta * r for delta, r in factors), 24)
    if shift.denominator != 1 or shift < 0:
        raise PreconditionError("eta_product", f"q^{shift} is not a nonnegative integral power")
    shift = int(shift)
    body = [1] + [0] * prec
    if prec >= shift:
        euler = euler_product(prec)
        for delta, r in factors:
            body = multiply(body, series_power(stretch(euler, delta, prec), r, prec), prec)
    coeffs = [0] * (prec + 1)
    for n in range(shift, prec + 1):
        coeffs[n] = body[n - shift]
    return coeffs


def classical_eisenstein(k: int, prec: int) -> List[int]:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 4."""
    if k < 4 or k % 2:
        raise PreconditionError("classical_eisenstein", f"weight {k} must be even and at least 4")
    b = sympy.bernoulli(k)
    factor = Fraction(-2 * k) / Fraction(int(b.p), int(b.q))
    if factor.denominator != 1:
        raise PreconditionError("classical_eisenstein", f"E_{k} is not integrally normalized")
    factor = int(factor)
    return [1] + [factor * int(sympy.divisor_sigma(n, k - 1)) for n in range(1, prec + 1)]
