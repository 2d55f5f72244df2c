"""
Exact arithmetic in prime fields F_p and their extensions F_{p^d}.

Elements are stored in the polynomial basis 1, x, ..., x^{d-1} modulo a
deterministic modulus: the lexicographically smallest monic irreducible
polynomial of degree d (coefficients compared low-to-high). Identical (p, d)
therefore always give identical fields, and every choice made here (modulus,
generator, roots of unity, embeddings) is reproducible across runs.
"""

import itertools
import logging
from functools import cached_property, lru_cache
from typing import Iterator, Sequence, Tuple, Union

import sympy

from ..config.settings import get_global_settings
from ..errors import (
    CompositeCharacteristic,
    DegreeOverflow,
    DivisionByZero,
    FieldMismatch,
    NoEmbedding,
    NoSuchRoot,
    ParseError,
)

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]


# Polynomial helpers over F_p (low-to-high coefficient tuples)

def _trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return _trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n))


def _poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(c % p for c in out)


def _poly_divmod(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("poly_divmod", "division by the zero polynomial")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] * inv_lead % p
        q[shift] = c
        if c:
            for j, y in enumerate(b):
                a[shift + j] = (a[shift + j] - c * y) % p
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mod(a: Poly, m: Poly, p: int) -> Poly:
    return _poly_divmod(a, m, p)[1]


def _poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, _poly_mod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def _poly_powmod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Poly, p: int) -> bool:
    """Check gcd(x^{p^i} - x, m) = 1 for 0 < i < d and x^{p^d} = x mod m."""
    d = len(modulus) - 1
    if d == 1:
        return True
    x: Poly = (0, 1)
    power = x
    for i in range(1, d + 1):
        power = _poly_powmod(power, p, modulus, p)
        if i < d:
            if len(_poly_gcd(modulus, _poly_sub(power, x, p), p)) > 1:
                return False
        elif _poly_sub(power, x, p):
            return False
    return True


def _smallest_irreducible(p: int, d: int) -> Poly:
    if d == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=d):
        if low[0] == 0:
            continue
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {d} over F_{p}")


class FiniteField:
    """The field F_{p^d} with its deterministic modulus."""

    def __init__(self, p: int, d: int, modulus: Poly):
        self.p = p
        self.d = d
        self.modulus = tuple(modulus)

    @property
    def order(self) -> int:
        return self.p ** self.d

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.d, self.modulus) == (other.p, other.d, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.d, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField({self.descriptor()})"

    def descriptor(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.d};{coeffs})"

    # Element constructors

    def __call__(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.parent != self:
                raise FieldMismatch("field_element", f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.d - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            raise ParseError("field_element", f"expected at most {self.d} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(coeffs) + (0,) * (self.d - len(coeffs)))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        """The class of x (a root of the modulus)."""
        if self.d == 1:
            return self(-self.modulus[0])
        return self((0, 1))

    # Canonical ordering: coefficients read as the base-p integer sum c_i p^i

    def element_from_index(self, index: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.d):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator["FieldElement"]:
        for index in range(self.order):
            yield self.element_from_index(index)

    @cached_property
    def _group_order_factors(self) -> Tuple[int, ...]:
        return tuple(sorted(sympy.factorint(self.order - 1)))

    @cached_property
    def multiplicative_generator(self) -> "FieldElement":
        """Smallest generator of the multiplicative group in canonical order."""
        n = self.order - 1
        for index in range(1, self.order):
            g = self.element_from_index(index)
            if all(g ** (n // r) != self.one() for r in self._group_order_factors):
                logger.debug("generator of %s: %s", self.descriptor(), g.token())
                return g
        raise AssertionError("multiplicative group has no generator")


class FieldElement:
    """An element of a FiniteField, immutable."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: FiniteField, coeffs: Poly):
        self.parent = parent
        self.coeffs = coeffs

    # Helpers

    def _coerce(self, other, op: str) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.parent != self.parent:
                raise FieldMismatch(op, f"{self.parent.descriptor()} vs {other.parent.descriptor()}")
            return other
        if isinstance(other, int):
            return self.parent(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def _poly(self) -> Poly:
        return _trim(self.coeffs)

    def _from_poly(self, poly: Poly) -> "FieldElement":
        return FieldElement(self.parent, tuple(poly) + (0,) * (self.parent.d - len(poly)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.parent(other).coeffs
        if isinstance(other, FieldElement):
            return self.parent == other.parent and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.parent, self.coeffs))

    def __repr__(self) -> str:
        if self.parent.d == 1:
            return f"{self.coeffs[0]} (mod {self.parent.p})"
        return f"{self.token()} in {self.parent.descriptor()}"

    def token(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def index(self) -> int:
        return sum(c * self.parent.p ** i for i, c in enumerate(self.coeffs))

    # Ring operations

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other, "add")
        p = self.parent.p
        return FieldElement(self.parent, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        p = self.parent.p
        return FieldElement(self.parent, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other, "sub"))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other, "sub") - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other, "mul")
        p = self.parent.p
        if self.parent.d == 1:
            return FieldElement(self.parent, (self.coeffs[0] * other.coeffs[0] % p,))
        product = _poly_mod(_poly_mul(self._poly(), other._poly(), p), self.parent.modulus, p)
        return self._from_poly(product)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inv", "zero has no inverse")
        if self.parent.d == 1:
            return FieldElement(self.parent, (pow(self.coeffs[0], -1, self.parent.p),))
        return self ** (self.parent.order - 2)

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other, "div").inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other, "div") * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if not isinstance(n, int):
            raise TypeError("field exponents must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        if self.parent.d == 1:
            return FieldElement(self.parent, (pow(self.coeffs[0], n, self.parent.p),))
        if self.is_zero():
            return self.parent.one() if n == 0 else self
        n %= self.parent.order - 1
        p = self.parent.p
        return self._from_poly(_poly_powmod(self._poly(), n, self.parent.modulus, p))

    def frobenius(self) -> "FieldElement":
        return self ** self.parent.p

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise DivisionByZero("order", "zero has no multiplicative order")
        order = self.parent.order - 1
        for r, e in sympy.factorint(order).items():
            for _ in range(e):
                if self ** (order // r) == 1:
                    order //= r
                else:
                    break
        return order

    def sqrt(self) -> "FieldElement":
        """A square root, or NoSuchRoot when the element is a non-square."""
        if self.is_zero():
            return self
        q = self.parent.order
        if self.parent.p == 2:
            return self ** (q // 2)
        if self ** ((q - 1) // 2) != 1:
            raise NoSuchRoot("sqrt", f"{self!r} is not a square")
        # Tonelli-Shanks with the canonical generator as non-residue
        s, t = 0, q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.parent.multiplicative_generator ** t
        x = self ** ((t + 1) // 2)
        b = self ** t
        m = s
        while b != 1:
            i, b2 = 0, b
            while b2 != 1:
                b2, i = b2 * b2, i + 1
            w = z ** (2 ** (m - i - 1))
            x, z = x * w, w * w
            b, m = b * z, i
        return x


# Operations

@lru_cache(maxsize=None)
def make_field(p: int, d: int = 1) -> FiniteField:
    """Return the canonical field F_{p^d}."""
    settings = get_global_settings()
    if d < 1:
        raise DegreeOverflow("make_field", f"degree must be positive, got {d}")
    if p < 2 or not sympy.isprime(p):
        raise CompositeCharacteristic("make_field", f"{p} is not prime", {"p": p})
    if p >= settings.max_characteristic or p ** d > settings.max_field_order:
        raise DegreeOverflow(
            "make_field",
            f"F_{p}^{d} exceeds the configured limits",
            {"p": p, "d": d, "max_field_order": settings.max_field_order},
        )
    modulus = _smallest_irreducible(p, d)
    logger.debug("make_field(%d, %d): modulus %s", p, d, modulus)
    return FiniteField(p, d, modulus)


def field_arith(op: str, a: FieldElement, b: Union[FieldElement, int, None] = None) -> FieldElement:
    """Dispatch one of add, sub, mul, div, neg, inv, pow."""
    operations = {
        "add": lambda: a + a._coerce(b, "add"),
        "sub": lambda: a - a._coerce(b, "sub"),
        "mul": lambda: a * a._coerce(b, "mul"),
        "div": lambda: a / a._coerce(b, "div"),
        "neg": lambda: -a,
        "inv": lambda: a.inverse(),
        "pow": lambda: a ** int(b),
    }
    if op not in operations:
        raise ValueError(f"Unknown field operation: {op}")
    return operations[op]()


def nth_root_of_unity(field: FiniteField, n: int) -> FieldElement:
    """Deterministic primitive n-th root of unity g^{(q-1)/n}."""
    if n < 1 or n % field.p == 0 or (field.order - 1) % n:
        raise NoSuchRoot(
            "nth_root_of_unity",
            f"no primitive {n}-th root of unity in {field.descriptor()}",
            {"n": n, "order": field.order},
        )
    return field.multiplicative_generator ** ((field.order - 1) // n)


@lru_cache(maxsize=None)
def _embedding_image_of_gen(small: FiniteField, big: FiniteField) -> FieldElement:
    # Roots of the small modulus lie in the subfield of order q = |small|,
    # whose nonzero elements are the powers of gamma.
    q = small.order
    gamma = big.multiplicative_generator ** ((big.order - 1) // (q - 1))
    roots = []
    beta = big.one()
    for _ in range(q - 1):
        value = big.zero()
        for c in reversed(small.modulus):
            value = value * beta + c
        if value.is_zero():
            roots.append(beta)
        beta = beta * gamma
    return min(roots, key=FieldElement.index)


def embed(a: FieldElement, target: FiniteField) -> FieldElement:
    """Image of a under the canonical embedding F_{p^d} -> F_{p^d'}."""
    source = a.parent
    if source.p != target.p or target.d % source.d:
        raise NoEmbedding(
            "embed",
            f"{source.descriptor()} does not embed in {target.descriptor()}",
        )
    if source == target:
        return a
    if source.d == 1:
        return target(a.coeffs[0])
    image_of_x = _embedding_image_of_gen(source, target)
    result = target.zero()
    for c in reversed(a.coeffs):
        result = result * image_of_x + c
    return result


# Serialization

def parse_field(token: str) -> FiniteField:
    """Parse GF(p^d;c_0,...,c_d)."""
    token = token.strip()
    if not (token.startswith("GF(") and token.endswith(")")):
        raise ParseError("parse_field", f"bad field token {token!r}")
    head, _, coeffs = token[3:-1].partition(";")
    p_str, _, d_str = head.partition("^")
    field = make_field(int(p_str), int(d_str or 1))
    if coeffs and tuple(int(c) for c in coeffs.split(",")) != field.modulus:
        raise ParseError("parse_field", f"{token!r} does not use the canonical modulus")
    return field


def parse_element(field: FiniteField, token: str) -> FieldElement:
    """Parse [c_0,...,c_{d-1}] (a bare integer is accepted for prime fields)."""
    token = token.strip()
    if token.startswith("[") and token.endswith("]"):
        body = token[1:-1].strip()
        return field([int(c) for c in body.split(",")] if body else [])
    try:
        return field(int(token))
    except ValueError as exc:
        raise ParseError("parse_element", f"bad element token {token!r}") from exc


def quadratic_roots(b: FieldElement, c: FieldElement) -> Tuple[FieldElement, ...]:
    """Roots of X^2 + bX + c in the field of b, sorted canonically."""
    field = b.parent
    if field.p == 2:
        limit = get_global_settings().root_search_limit
        if field.order > limit:
            raise NoSuchRoot("quadratic_roots", "characteristic-2 root search exceeds the configured limit")
        return tuple(x for x in field.elements() if (x * x + b * x + c).is_zero())
    disc = b * b - 4 * c
    try:
        s = disc.sqrt()
    except NoSuchRoot:
        return ()
    roots = {(-b + s) / 2, (-b - s) / 2}
    return tuple(sorted(roots, key=FieldElement.index))
