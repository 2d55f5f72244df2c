"""
Forms killed by theta: f = A^r g(q^p) with 0 <= r <= p-1 and p l + r(p-1) = k.
"""

from typing import Tuple

from ..errors import NegativeWeight, ThetaNonzero
from ..qseries import ModularForm, QExpansion


def theta_kernel_decompose(f: ModularForm) -> Tuple[int, ModularForm]:
    p = f.p
    for n, c in enumerate(f.qexp.coeffs):
        if c and n % p:
            raise ThetaNonzero(
                "theta_kernel_decompose",
                f"a_{n} != 0 with p={p} not dividing {n}",
                {"witness": n, "value": c.token()},
            )
    if f.weight < 0:
        raise NegativeWeight("theta_kernel_decompose", f"weight {f.weight} is negative")
    r = -f.weight % p
    weight, remainder = divmod(f.weight - r * (p - 1), p)
    if weight < 0:
        raise NegativeWeight(
            "theta_kernel_decompose",
            f"r={r} forces weight ({f.weight} - {r * (p - 1)})/{p} < 0",
            {"r": r, "weight": f.weight},
        )
    assert remainder == 0
    prec = f.prec // p
    coeffs = tuple(f.qexp.coeffs[p * m] for m in range(prec + 1))
    g = f.derive(QExpansion(f.base, prec, coeffs), weight=weight)
    return r, g
