"""
Tests for Dirichlet characters, their lifts and generalized Bernoulli numbers.
"""

from fractions import Fraction

import pytest
import sympy

from src.characters import (
    CycloRational,
    char_eval,
    char_lift,
    char_make,
    cyclotomic_polynomial,
    gen_bernoulli,
    p_integral_check,
    parse_character,
    parse_cyclo,
    trivial_character,
    unit_group,
)
from src.errors import BadOrder, IncompleteAssignment, NotPIntegral, ParseError
from src.gf import make_field


class TestUnitGroup:
    def test_generators_are_crt_lifts(self):
        group = unit_group(12)
        assert group.generators == (7, 5)
        assert group.orders == (2, 2)

    def test_power_of_two(self):
        group = unit_group(16)
        assert group.generators == (15, 5)
        assert group.orders == (2, 4)

    def test_logs_reconstruct_units(self):
        group = unit_group(45)
        for m in range(1, 45):
            if sympy.gcd(m, 45) != 1:
                continue
            value = 1
            for g, e in zip(group.generators, group.logs(m)):
                value = value * pow(g, e, 45) % 45
            assert value == m


class TestDirichletCharacter:
    def test_odd_character_mod_four(self, chi4, F7):
        assert chi4(1) == 1
        assert chi4(3) == -1
        assert chi4(2) == 0
        assert chi4(5) == 1
        assert chi4.parity() == F7(-1)
        assert chi4.conductor == 4
        assert chi4.is_primitive()
        assert chi4.order == 2

    def test_extension_keeps_conductor(self, chi4):
        chi = chi4.extend(12)
        assert chi.modulus == 12
        assert chi.conductor == 4
        assert not chi.is_primitive()
        assert chi.primitive() == chi4
        assert chi(5) == chi4(5)
        assert chi(3) == 0

    def test_product(self, chi4, chi3, F7):
        chi = chi4 * chi3
        assert chi.modulus == 12
        assert chi.conductor == 12
        assert chi.parity() == F7(1)
        for m in range(1, 13):
            assert chi(m) == chi4(m) * chi3(m)

    def test_trivial_character(self, F7):
        chi = trivial_character(F7, 6)
        assert chi.is_trivial()
        assert chi.conductor == 1
        assert chi(5) == 1
        assert chi(3) == 0

    def test_order_three(self, F7):
        chi = char_make(7, {3: 2}, F7)
        assert chi.order == 3
        assert chi.conductor == 7
        assert chi(-1) == 1

    @pytest.mark.parametrize("modulus,assignments", [(4, {3: -1}), (5, {2: -1}), (9, {2: 2}), (12, {7: -1, 5: -1})])
    def test_completely_multiplicative(self, rng, F7, modulus, assignments):
        chi = char_make(modulus, assignments, F7)
        for _ in range(200):
            a, b = rng.randrange(-300, 300), rng.randrange(-300, 300)
            assert char_eval(chi, a * b) == char_eval(chi, a) * char_eval(chi, b), (a, b)

    def test_bad_order(self, F7):
        with pytest.raises(BadOrder):
            char_make(4, {3: 2}, F7)
        with pytest.raises(BadOrder):
            char_make(4, {3: 0}, F7)

    def test_incomplete_assignment(self, F7):
        with pytest.raises(IncompleteAssignment):
            char_make(12, {7: -1}, F7)

    def test_token_round_trip(self, chi4, F7):
        assert chi4.token() == "chi(4; 3:[6])"
        assert parse_character(chi4.token(), F7) == chi4
        chi = chi4 * chi3_of(F7)
        assert parse_character(chi.token(), F7) == chi

    def test_parse_rejects_garbage(self, F7):
        with pytest.raises(ParseError):
            parse_character("psi(4; 3:1)", F7)

    def test_change_ring(self, chi4, F49):
        chi = chi4.change_ring(F49)
        assert chi.target == F49
        assert chi(3) == F49(-1)
        assert chi.conductor == 4


def chi3_of(F):
    return char_make(3, {2: -1}, F)


class TestCyclotomic:
    def test_cyclotomic_polynomials(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_zeta_relations(self):
        zeta = CycloRational.zeta_power(3, 1)
        assert zeta ** 3 == 1
        assert CycloRational.zeta_power(3, 2) == CycloRational(3, [-1, -1])
        assert zeta + zeta * zeta == -1

    def test_mixed_orders(self):
        i = CycloRational.zeta_power(4, 1)
        assert i * i == -1
        assert CycloRational.zeta_power(2, 1) == -1
        assert (CycloRational.zeta_power(12, 3) - i).is_zero()

    def test_token_round_trip(self):
        x = CycloRational(5, [Fraction(1, 2), 3, 0, Fraction(-7, 9)])
        assert parse_cyclo(x.token()) == x


class TestLift:
    def test_reduction_inverts_the_lift(self, F7):
        chi = char_make(7, {3: 2}, F7)
        lifted, reduction = char_lift(chi)
        assert lifted.order == 3
        for m in range(1, 14):
            assert reduction(lifted(m)) == chi(m)

    def test_quadratic_lift_is_rational(self, chi4):
        lifted, _ = char_lift(chi4)
        assert lifted(3) == -1
        assert lifted(1) == 1
        assert lifted(2) == 0

    def test_reduction_rejects_p_in_denominator(self, triv7):
        _, reduction = char_lift(triv7)
        assert reduction(CycloRational.rational(Fraction(1, 3))) == 5
        with pytest.raises(NotPIntegral):
            reduction(CycloRational.rational(Fraction(1, 14)))


class TestBernoulli:
    def test_trivial_character_matches_classical_numbers(self, triv7):
        lifted, _ = char_lift(triv7)
        for k in range(0, 31):
            if k == 1:
                continue
            b = sympy.bernoulli(k)
            assert gen_bernoulli(k, lifted) == Fraction(int(b.p), int(b.q)), k

    def test_b1_of_the_trivial_character(self, triv7):
        # sum x e^x / (e^x - 1) has B_1 = +1/2
        lifted, _ = char_lift(triv7)
        assert gen_bernoulli(1, lifted) == Fraction(1, 2)

    def test_odd_character_mod_four(self, chi4):
        lifted, _ = char_lift(chi4)
        assert gen_bernoulli(1, lifted) == Fraction(-1, 2)
        assert gen_bernoulli(3, lifted) == Fraction(3, 2)
        assert gen_bernoulli(2, lifted) == 0

    @pytest.mark.parametrize(
        "modulus,assignments,k",
        [
            (1, {}, 3),
            (1, {}, 5),
            (4, {3: -1}, 2),
            (4, {3: -1}, 4),
            (4, {3: -1}, 6),
            (5, {2: -1}, 1),
            (5, {2: -1}, 3),
            (9, {2: 2}, 1),
            (9, {2: 2}, 3),
            (12, {7: -1, 5: -1}, 5),
        ],
    )
    def test_vanishes_when_parity_differs(self, F7, modulus, assignments, k):
        chi = trivial_character(F7) if modulus == 1 else char_make(modulus, assignments, F7)
        assert chi(-1) != (-1) ** k
        lifted, _ = char_lift(chi)
        assert gen_bernoulli(k, lifted).is_zero()

    def test_quadratic_character_mod_five(self, chi5):
        # B_{2,chi} = 4/5 for the character of Q(sqrt 5)
        lifted, _ = char_lift(chi5)
        assert gen_bernoulli(2, lifted) == Fraction(4, 5)

    def test_imprimitive_character_uses_primitive_form(self, chi4):
        lifted, _ = char_lift(chi4.extend(12))
        assert gen_bernoulli(3, lifted) == Fraction(3, 2)

    @pytest.mark.parametrize("p,k,expected", [(2, 4, False), (7, 4, True), (691, 12, True), (13, 12, False)])
    def test_p_integrality_of_constant_term(self, p, k, expected):
        F = make_field(p)
        lifted, _ = char_lift(trivial_character(F))
        c0 = gen_bernoulli(k, lifted) / (-2 * k)
        assert p_integral_check(c0, p) is expected
