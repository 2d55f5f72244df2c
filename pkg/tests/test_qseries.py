"""
Tests for q-expansions, form metadata, the operators and weight words.
"""

import pytest

from src.errors import (
    BadLevelDivisibility,
    CharacteristicDividesLevel,
    FieldMismatch,
    InconsistentFlags,
    NonIntegralLevel,
    NotCoprime,
    NotNormalizable,
    NotPure,
    ParseError,
    PrecisionUnderflow,
)
from src.newform import admissible_frobenius_counts
from src.qseries import (
    CUSPIDAL,
    NORMALIZED,
    QExpansion,
    WeightWord,
    degeneracy_Bd,
    diamond,
    divide_exponents,
    enumerate_words,
    frobenius,
    hasse_mult,
    hecke_Tn,
    is_eigen_upto,
    linear_combination,
    make_form,
    normalize,
    parse_form,
    read_form,
    serialize_form,
    theta,
    theta_power,
    write_form,
)
from tests.conftest import random_form


class TestQExpansion:
    def test_precision_is_the_minimum(self, F7):
        f = QExpansion.from_coefficients(F7, [1, 2, 3, 4])
        g = QExpansion.from_coefficients(F7, [1, 1])
        assert (f + g).prec == 1
        assert (f + g).coeffs == (F7(2), F7(3))

    def test_coefficient_beyond_precision(self, F7):
        f = QExpansion.from_coefficients(F7, [1, 2])
        with pytest.raises(PrecisionUnderflow):
            f[2]

    def test_stretch(self, F7):
        f = QExpansion.from_coefficients(F7, [1, 2, 3])
        g = f.stretch(3)
        assert g.prec == 6
        assert g.support() == [0, 3, 6]
        assert g[3] == 2

    def test_linear_combination(self, F7):
        f = QExpansion.from_coefficients(F7, [1, 0, 1])
        g = QExpansion.from_coefficients(F7, [0, 1, 1, 5])
        h = linear_combination([(2, f), (F7(3), g)])
        assert h.prec == 2
        assert h.coeffs == (F7(2), F7(3), F7(5))

    def test_mixed_fields(self, F7, F49):
        with pytest.raises(FieldMismatch):
            QExpansion.zero(F7, 3) + QExpansion.zero(F49, 3)

    def test_first_difference(self, F7):
        f = QExpansion.from_coefficients(F7, [1, 2, 3, 4])
        g = QExpansion.from_coefficients(F7, [1, 2, 0])
        assert f.first_difference(g) == 2
        assert f.agrees_with(f.truncate(2))


class TestModularForm:
    def test_level_prime_to_p(self, F7):
        with pytest.raises(CharacteristicDividesLevel):
            make_form(F7, [0, 1], level=14)

    def test_character_modulus_divides_level(self, F7, chi4):
        with pytest.raises(BadLevelDivisibility):
            make_form(F7, [0, 1], level=6, character=chi4)

    def test_flags_are_checked(self, F7):
        with pytest.raises(InconsistentFlags):
            make_form(F7, [1, 1], flags=[CUSPIDAL])
        with pytest.raises(InconsistentFlags):
            make_form(F7, [0, 2], flags=[NORMALIZED])
        with pytest.raises(InconsistentFlags):
            make_form(F7, [0, 1], flags=["eigen"])

    def test_nebentypus_vanishes_on_level_divisors(self, F7, chi4):
        f = make_form(F7, [0, 1], level=12, character=chi4)
        assert f.nebentypus(3) == 0
        assert f.nebentypus(5) == 1
        assert f.nebentypus(7) == -1

    def test_derive_recomputes_flags(self, F7):
        f = make_form(F7, [0, 1, 2], weight=2, flags=[CUSPIDAL, NORMALIZED])
        g = f.derive(f.qexp.scale(2))
        assert g.is_cuspidal
        assert not g.is_normalized

    def test_change_ring(self, F49, e4):
        g = e4.change_ring(F49)
        assert g.base == F49
        assert g.a(2) == F49(2)
        assert g.character.target == F49


class TestHecke:
    def test_precision(self, e4):
        assert hecke_Tn(e4, 3).prec == 50
        with pytest.raises(PrecisionUnderflow):
            hecke_Tn(e4.truncate(20), 21)

    def test_eisenstein_eigenvalues(self, e4, F7):
        # a_l(E_4) = 1 + l^3
        for l in (2, 3, 5, 11, 13):
            image = hecke_Tn(e4, l)
            assert image.qexp.agrees_with(e4.qexp.scale(1 + l ** 3))

    def test_is_eigen_upto(self, e4, e3_chi4):
        assert is_eigen_upto(e4, 30).is_eigen
        check = is_eigen_upto(e3_chi4, 30)
        assert check.is_eigen
        assert check.eigenvalues[2] == 1
        assert check.eigenvalues[3] == 6

    def test_failure_witness(self, e4, F7):
        coeffs = list(e4.qexp.coeffs)
        coeffs[4] = coeffs[4] + 1
        f = e4.derive(QExpansion(F7, e4.prec, tuple(coeffs)))
        check = is_eigen_upto(f, 10)
        assert not check.is_eigen
        assert check.witness.l == 2
        assert check.witness.m == 2

    def test_skipped_primes(self, e4):
        check = is_eigen_upto(e4.truncate(10), 20)
        assert check.is_eigen
        assert check.skipped == [11, 13, 17, 19]

    def test_multiplicativity(self, e4):
        # T_6 = T_2 T_3 on a level one eigenform
        t6 = hecke_Tn(e4, 6)
        t23 = hecke_Tn(hecke_Tn(e4, 3), 2)
        assert t6.qexp.agrees_with(t23.qexp)

    def test_coprime_products_on_random_forms(self, rng, F7, chi4, chi3, chi5):
        cases = [(12, chi4), (12, chi4 * chi3), (5, chi5), (20, chi4 * chi5)]
        for level, character in cases:
            for _ in range(5):
                f = random_form(rng, F7, 120, level=level, weight=rng.randrange(1, 9), character=character)
                for m, n in [(2, 3), (3, 4), (2, 5), (5, 3)]:
                    assert hecke_Tn(hecke_Tn(f, n), m).qexp == hecke_Tn(f, m * n).qexp, (level, m, n)


class TestOperators:
    def test_diamond(self, e3_chi4, F7):
        assert diamond(e3_chi4, 3).qexp == e3_chi4.qexp.scale(-1)
        with pytest.raises(NotCoprime):
            diamond(e3_chi4, 2)

    def test_theta(self, e4, F7):
        g = theta(e4)
        assert g.weight == 4 + 7 + 1
        assert g.a(0) == 0
        assert g.is_cuspidal
        for n in range(1, 20):
            assert g.a(n) == F7(n) * e4.a(n)

    def test_theta_power_period(self, e4):
        # n^{p-1} = 1 for p not dividing n
        g = theta_power(e4, 6)
        h = theta(g)
        assert h.qexp.agrees_with(theta(e4).qexp)

    def test_hasse_and_frobenius(self, e4):
        assert hasse_mult(e4, 2).weight == 16
        assert hasse_mult(e4, 2).qexp == e4.qexp
        g = frobenius(e4)
        assert g.weight == 28
        assert g.prec == 7 * e4.prec
        assert g.a(14) == e4.a(2)
        assert g.a(13) == 0

    def test_degeneracy(self, e4, e3_chi4):
        g = degeneracy_Bd(e4, 2, 6)
        assert g.level == 6
        assert g.prec == 2 * e4.prec
        assert g.a(6) == e4.a(3)
        with pytest.raises(CharacteristicDividesLevel):
            degeneracy_Bd(e4, 7, 7)
        with pytest.raises(BadLevelDivisibility):
            degeneracy_Bd(e3_chi4, 2, 4)
        for d, M in [(0, 4), (-2, 4), (1, 0)]:
            with pytest.raises(BadLevelDivisibility):
                degeneracy_Bd(e3_chi4, d, M)

    def test_divide_exponents_undoes_degeneracy(self, e3_chi4):
        g = degeneracy_Bd(e3_chi4, 3, 12)
        h = divide_exponents(g, 3)
        assert h.level == 4
        assert h.qexp.agrees_with(e3_chi4.qexp)
        assert h.prec == e3_chi4.prec

    def test_divide_exponents_failures(self, e4, F7):
        with pytest.raises(NotPure):
            divide_exponents(e4, 2)
        pure = make_form(F7, {0: 1, 2: 3}, level=1, prec=4)
        with pytest.raises(NonIntegralLevel):
            divide_exponents(pure, 2)

    def test_normalize(self, e4, F7):
        f = e4.derive(e4.qexp.scale(3))
        assert normalize(f).qexp == e4.qexp
        with pytest.raises(NotNormalizable):
            normalize(make_form(F7, [1, 0, 1]))

    def test_commutations_on_random_forms(self, rng, F7):
        for _ in range(10):
            f = random_form(rng, F7, 30, level=5, weight=rng.randint(2, 6))
            d = rng.choice([2, 3])
            lhs = degeneracy_Bd(frobenius(f), d, 5 * d)
            rhs = frobenius(degeneracy_Bd(f, d, 5 * d))
            assert lhs.qexp == rhs.qexp
            n = rng.randint(2, 10)
            assert hecke_Tn(hasse_mult(f, 1), n).qexp == hecke_Tn(f, n).qexp


class TestWords:
    def test_weight_recursion(self):
        word = WeightWord(("A", "Frob", "A"))
        assert word.weight(4, 7) == 7 * (4 + 6) + 6
        assert word.frobenius_count == 1

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_words_collapse_to_frobenius_counts(self, p, k):
        for target in range(k, p * p * k + 4 * (p - 1) + 1):
            counts = {w.frobenius_count for w in enumerate_words(k, target, p)}
            assert counts == set(admissible_frobenius_counts(k, target, p))

    def test_applied_word_is_a_stretch(self, e4):
        word = WeightWord(("A", "A", "Frob", "A"))
        g = word.apply(e4)
        assert g.weight == word.weight(4, 7)
        assert g.qexp == e4.qexp.stretch(7)


class TestFileFormat:
    def test_round_trip(self, e3_chi4):
        text = serialize_form(e3_chi4)
        assert text.splitlines()[1].startswith("N=4 k=3 char=chi(4; 3:[6])")
        assert parse_form(text) == e3_chi4

    def test_extension_field_round_trip(self, e4, F49, tmp_path):
        f = theta(e4).change_ring(F49)
        f = f.derive(f.qexp.scale(F49.gen()))
        path = tmp_path / "f.form"
        write_form(f, path)
        assert read_form(path) == f

    def test_rejects_coefficients_beyond_precision(self):
        text = "p=7 d=1 modulus=0,1\nN=1 k=4 char=chi(1;) flags=\nprec=2\na3=[1]\n"
        with pytest.raises(ParseError):
            parse_form(text)

    def test_rejects_bad_header(self):
        with pytest.raises(ParseError):
            parse_form("p=7\nN=1\nprec=2\n")
