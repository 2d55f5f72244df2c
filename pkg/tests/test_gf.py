"""
Tests for finite fields and the incremental linear solver.
"""

import pytest

from src.config.settings import update_setting
from src.errors import (
    CompositeCharacteristic,
    DegreeOverflow,
    DivisionByZero,
    NoEmbedding,
    NoSuchRoot,
    ParseError,
)
from src.gf import (
    IncrementalSystem,
    embed,
    field_arith,
    is_irreducible,
    least_index_solution,
    make_field,
    nth_root_of_unity,
    nullspace_basis,
    parse_element,
    parse_field,
    quadratic_roots,
)


class TestMakeField:
    def test_prime_field(self):
        F = make_field(7)
        assert F.order == 7
        assert F.modulus == (0, 1)
        assert F.d == 1

    def test_canonical_modulus_is_smallest_irreducible(self):
        assert make_field(2, 3).modulus == (1, 0, 1, 1)
        assert make_field(3, 2).modulus == (1, 0, 1)
        assert is_irreducible(make_field(5, 2).modulus, 5)

    def test_same_arguments_give_equal_fields(self):
        assert make_field(7, 2) == make_field(7, 2)
        assert make_field(7, 2) != make_field(7)

    def test_composite_characteristic(self):
        with pytest.raises(CompositeCharacteristic):
            make_field(4)
        with pytest.raises(CompositeCharacteristic):
            make_field(1)

    def test_degree_overflow(self):
        update_setting("max_field_order", 100)
        with pytest.raises(DegreeOverflow):
            make_field(3, 5)

    def test_descriptor_round_trip(self):
        F = make_field(5, 2)
        assert parse_field(F.descriptor()) is F
        assert parse_field("GF(7)") == make_field(7)

    def test_parse_field_rejects_other_modulus(self):
        with pytest.raises(ParseError):
            parse_field("GF(3^2;2,0,1)")
        with pytest.raises(CompositeCharacteristic):
            parse_field("GF(9^1)")


class TestArithmetic:
    def test_prime_field_arithmetic(self):
        F = make_field(7)
        assert F(3) * F(5) == 1
        assert F(3).inverse() == 5
        assert F(2) - F(5) == 4
        assert F(3) / 3 == 1
        assert F(-1) == 6

    def test_inverse_of_zero(self):
        F = make_field(7)
        with pytest.raises(DivisionByZero):
            F.zero().inverse()
        with pytest.raises(ZeroDivisionError):
            field_arith("div", F(1), 0)

    def test_field_arith_dispatch(self):
        F = make_field(11)
        a, b = F(4), F(9)
        assert field_arith("add", a, b) == 2
        assert field_arith("sub", a, b) == 6
        assert field_arith("mul", a, b) == 3
        assert field_arith("neg", a) == 7
        assert field_arith("inv", a) == 3
        assert field_arith("pow", a, -1) == 3
        with pytest.raises(ValueError):
            field_arith("mod", a, b)

    def test_extension_field(self):
        F = make_field(3, 2)
        x = F.gen()
        assert x * x == -1
        assert x ** 4 == 1
        assert x.multiplicative_order() == 4
        assert x.frobenius() == -x

    @pytest.mark.parametrize("p,d", [(2, 4), (3, 3), (7, 2), (11, 2)])
    def test_frobenius_is_a_ring_map(self, rng, p, d):
        F = make_field(p, d)
        for _ in range(50):
            a = F.element_from_index(rng.randrange(F.order))
            b = F.element_from_index(rng.randrange(F.order))
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
        x = F.gen()
        for _ in range(d - 1):
            x = x.frobenius()
        assert x.frobenius() == F.gen()

    @pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (5, 2), (7, 2)])
    def test_fermat(self, p, d):
        F = make_field(p, d)
        for a in F.elements():
            if a:
                assert a ** (F.order - 1) == 1
                assert a * a.inverse() == 1

    def test_multiplicative_generator_has_full_order(self):
        for p, d in [(7, 1), (3, 2), (2, 4)]:
            F = make_field(p, d)
            assert F.multiplicative_generator.multiplicative_order() == F.order - 1

    def test_element_tokens(self):
        F = make_field(5, 2)
        a = F([2, 3])
        assert a.token() == "[2,3]"
        assert parse_element(F, a.token()) == a
        assert a.index() == 17
        assert F.element_from_index(17) == a


class TestRoots:
    def test_sqrt(self):
        F = make_field(7)
        assert F(2).sqrt() ** 2 == 2
        with pytest.raises(NoSuchRoot):
            F(3).sqrt()

    def test_sqrt_in_extension(self):
        F = make_field(7, 2)
        # every element of F_7 is a square in F_49
        assert F(3).sqrt() ** 2 == 3

    def test_sqrt_characteristic_two(self):
        F = make_field(2, 3)
        for a in F.elements():
            assert a.sqrt() ** 2 == a

    def test_quadratic_roots(self):
        F = make_field(7)
        assert quadratic_roots(F(-3), F(2)) == (F(1), F(2))
        assert quadratic_roots(F(-2), F(1)) == (F(1),)
        assert quadratic_roots(F(0), F(-3)) == ()

    def test_nth_root_of_unity(self):
        F = make_field(7)
        zeta = nth_root_of_unity(F, 3)
        assert zeta.multiplicative_order() == 3
        with pytest.raises(NoSuchRoot):
            nth_root_of_unity(F, 4)
        with pytest.raises(NoSuchRoot):
            nth_root_of_unity(F, 7)


class TestEmbedding:
    def test_embedding_is_a_ring_map(self):
        small, big = make_field(3, 2), make_field(3, 4)
        elements = list(small.elements())
        for a in elements:
            for b in elements[::2]:
                assert embed(a * b, big) == embed(a, big) * embed(b, big)
                assert embed(a + b, big) == embed(a, big) + embed(b, big)

    def test_prime_field_embeds_by_constants(self):
        assert embed(make_field(7)(3), make_field(7, 2)) == make_field(7, 2)(3)

    def test_no_embedding(self):
        with pytest.raises(NoEmbedding):
            embed(make_field(3, 2).one(), make_field(3, 3))
        with pytest.raises(NoEmbedding):
            embed(make_field(3).one(), make_field(5))


class TestLinearSystems:
    def test_consistent_system(self):
        F = make_field(7)
        system = IncrementalSystem(F, 2)
        assert system.add_equation([F(1), F(0)], F(3), tag=0)
        assert system.add_equation([F(0), F(1)], F(4), tag=1)
        assert system.add_equation([F(1), F(1)], F(0), tag=2)
        result = system.solve()
        assert result.consistent
        assert result.solution == [F(3), F(4)]
        assert result.rank == 2

    def test_first_inconsistent_equation_is_the_witness(self):
        F = make_field(7)
        system = IncrementalSystem(F, 2)
        system.add_equation([F(1), F(0)], F(3), tag=0)
        system.add_equation([F(0), F(1)], F(4), tag=1)
        assert not system.add_equation([F(1), F(1)], F(1), tag=5)
        assert not system.add_equation([F(1), F(1)], F(2), tag=6)
        result = system.solve()
        assert not result.consistent
        assert result.witness == 5

    def test_least_index_solution_prefers_early_columns(self):
        F = make_field(7)
        rows = [([F(1), F(1)], F(2)), ([F(2), F(2)], F(4))]
        assert least_index_solution(F, 2, rows) == [F(2), F(0)]

    def test_nullspace_of_dependent_columns(self):
        F = make_field(7)
        system = IncrementalSystem(F, 3)
        system.add_equation([F(1), F(2), F(2)], F(5), tag=0)
        system.add_equation([F(0), F(1), F(1)], F(2), tag=1)
        assert system.rank == 2
        kernel = system.nullspace()
        assert kernel == [[F(0), F(-1), F(1)]]
        solution = system.solve().solution
        assert solution == [F(1), F(2), F(0)]
        shifted = [a + F(3) * v for a, v in zip(solution, kernel[0])]
        assert shifted[0] + F(2) * shifted[1] + F(2) * shifted[2] == 5

    def test_nullspace_of_full_rank_system_is_empty(self):
        F = make_field(5)
        assert nullspace_basis(F, 2, [[F(1), F(0)], [F(0), F(1)]]) == []
