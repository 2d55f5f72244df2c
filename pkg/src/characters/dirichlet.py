"""
Dirichlet characters with values in a finite field.

A character mod N is stored by its values on the canonical generators of
(Z/NZ)^*: the CRT decomposition into prime-power factors, with the smallest
primitive root for odd prime powers, 3 for 4, and the pair {-1, 5} for 2^a,
a >= 3. Each local generator is lifted to a residue mod N that is 1 modulo
the other factors.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import sympy

from ..errors import BadOrder, FieldMismatch, IncompleteAssignment, ParseError
from ..gf import FieldElement, FiniteField, embed, parse_element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitFactor:
    """One prime-power factor of (Z/NZ)^* with its cyclic generators."""
    prime: int
    exponent: int
    local_generators: Tuple[int, ...]
    orders: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.prime ** self.exponent

    def logs(self, m: int) -> Tuple[int, ...]:
        """Exponents e_i with m = prod g_i^{e_i} mod q."""
        m %= self.q
        if self.prime == 2:
            if self.exponent == 1:
                return ()
            sign = 0 if m % 4 == 1 else 1
            if self.exponent == 2:
                return (sign,)
            unsigned = m if sign == 0 else (-m) % self.q
            return (sign, int(sympy.discrete_log(self.q, unsigned, 5)))
        return (int(sympy.discrete_log(self.q, m, self.local_generators[0])),)


def _smallest_primitive_root(q: int) -> int:
    phi = sympy.totient(q)
    for g in range(2, q):
        if gcd(g, q) == 1 and sympy.n_order(g, q) == phi:
            return g
    raise AssertionError(f"(Z/{q}Z)^* is not cyclic")


class UnitGroup:
    """Deterministic generators of (Z/NZ)^* and discrete logarithms against them."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.factors: List[UnitFactor] = []
        for l, a in sorted(sympy.factorint(modulus).items()):
            if l == 2:
                if a == 1:
                    gens, orders = (), ()
                elif a == 2:
                    gens, orders = (3,), (2,)
                else:
                    gens, orders = (2 ** a - 1, 5), (2, 2 ** (a - 2))
            else:
                gens, orders = (_smallest_primitive_root(l ** a),), (int(sympy.totient(l ** a)),)
            self.factors.append(UnitFactor(l, a, gens, orders))

    def _lift(self, local: int, q: int) -> int:
        rest = self.modulus // q
        if rest == 1:
            return local % q
        return 1 + rest * ((local - 1) * pow(rest, -1, q) % q)

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        return tuple(
            self._lift(g, factor.q) for factor in self.factors for g in factor.local_generators
        )

    @cached_property
    def orders(self) -> Tuple[int, ...]:
        return tuple(o for factor in self.factors for o in factor.orders)

    def logs(self, m: int) -> Tuple[int, ...]:
        """Exponent vector of a unit m against the generators."""
        return tuple(e for factor in self.factors for e in factor.logs(m))

    def lift_residue(self, m: int, factor: UnitFactor) -> int:
        """A residue mod N that is m modulo the factor and 1 elsewhere."""
        return self._lift(m, factor.q)


@lru_cache(maxsize=None)
def unit_group(modulus: int) -> UnitGroup:
    return UnitGroup(modulus)


class DirichletCharacter:
    """A homomorphism (Z/NZ)^* -> F^*, extended by zero."""

    def __init__(self, modulus: int, target: FiniteField, values: Sequence[FieldElement]):
        self.modulus = modulus
        self.target = target
        self.values = tuple(values)

    @property
    def group(self) -> UnitGroup:
        return unit_group(self.modulus)

    @property
    def values_on_generators(self) -> List[Tuple[int, FieldElement]]:
        return list(zip(self.group.generators, self.values))

    def __call__(self, m: int) -> FieldElement:
        if gcd(m, self.modulus) != 1:
            return self.target.zero()
        result = self.target.one()
        for value, e in zip(self.values, self.group.logs(m)):
            if e:
                result = result * value ** e
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.target == other.target
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.target, self.values))

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.token()})"

    def token(self) -> str:
        body = ", ".join(f"{g}:{v.token()}" for g, v in self.values_on_generators)
        return f"chi({self.modulus}; {body})" if body else f"chi({self.modulus};)"

    @cached_property
    def order(self) -> int:
        order = 1
        for v in self.values:
            o = v.multiplicative_order()
            order = order * o // gcd(order, o)
        return order

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    @cached_property
    def conductor(self) -> int:
        """Smallest M | N through which the character factors (kernel test per prime power)."""
        conductor = 1
        for factor in self.group.factors:
            l, a = factor.prime, factor.exponent
            for b in range(0, a + 1):
                step = l ** b
                kernel = (1 + j * step for j in range(l ** (a - b)))
                if all(
                    self(self.group.lift_residue(m, factor)) == 1
                    for m in kernel
                    if m % l
                ):
                    conductor *= step
                    break
        logger.debug("conductor of %s is %d", self.token(), conductor)
        return conductor

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def parity(self) -> FieldElement:
        """The value at -1."""
        return self(-1)

    def primitive(self) -> "DirichletCharacter":
        """The primitive character inducing this one."""
        c = self.conductor
        if c == self.modulus:
            return self
        values = []
        for g in unit_group(c).generators:
            m = next(g + j * c for j in range(self.modulus) if gcd(g + j * c, self.modulus) == 1)
            values.append(self(m))
        return DirichletCharacter(c, self.target, values)

    def extend(self, modulus: int) -> "DirichletCharacter":
        """The same character viewed modulo a multiple of its modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        if modulus == self.modulus:
            return self
        return DirichletCharacter(
            modulus, self.target, [self(g) for g in unit_group(modulus).generators]
        )

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.target != self.target:
            raise FieldMismatch("char_mul", "characters take values in different fields")
        modulus = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        a, b = self.extend(modulus), other.extend(modulus)
        return DirichletCharacter(modulus, self.target, [x * y for x, y in zip(a.values, b.values)])

    def same_primitive(self, other: "DirichletCharacter") -> bool:
        return self.primitive() == other.primitive()

    def change_ring(self, target: FiniteField) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, target, [embed(v, target) for v in self.values])


def trivial_character(target: FiniteField, modulus: int = 1) -> DirichletCharacter:
    return DirichletCharacter(modulus, target, [target.one()] * len(unit_group(modulus).generators))


def char_make(
    modulus: int,
    assignments: Union[Mapping[int, Union[int, FieldElement]], Iterable[Tuple[int, Union[int, FieldElement]]]],
    target: FiniteField,
) -> DirichletCharacter:
    """Build a character from generator -> value assignments."""
    group = unit_group(modulus)
    given: Dict[int, FieldElement] = {
        int(g) % modulus if modulus > 1 else 0: target(v)
        for g, v in (assignments.items() if isinstance(assignments, Mapping) else assignments)
    }
    expected = {g % modulus if modulus > 1 else 0 for g in group.generators}
    if set(given) != expected:
        raise IncompleteAssignment(
            "char_make",
            f"assignments must cover exactly the generators {sorted(expected)}",
            {"given": sorted(given)},
        )
    values = []
    for g, order in zip(group.generators, group.orders):
        v = given[g % modulus]
        if v.is_zero() or order % v.multiplicative_order():
            raise BadOrder(
                "char_make",
                f"value {v.token()} at generator {g} has order not dividing {order}",
                {"generator": g, "generator_order": order},
            )
        values.append(v)
    return DirichletCharacter(modulus, target, values)


def char_eval(character: DirichletCharacter, m: int) -> FieldElement:
    return character(m)


_CHI_RE = re.compile(r"^chi\(\s*(\d+)\s*;(.*)\)$")
_ASSIGN_RE = re.compile(r"(-?\d+)\s*:\s*(\[[^\]]*\]|-?\d+)")


def parse_character(token: str, target: FiniteField) -> DirichletCharacter:
    """Parse chi(N; g1:v1, g2:v2, ...)."""
    match = _CHI_RE.match(token.strip())
    if not match:
        raise ParseError("parse_character", f"bad character token {token!r}")
    modulus = int(match.group(1))
    assignments = [(int(g), parse_element(target, v)) for g, v in _ASSIGN_RE.findall(match.group(2))]
    return char_make(modulus, assignments, target)
