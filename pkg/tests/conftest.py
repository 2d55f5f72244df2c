"""
Shared fixtures: fields, characters and the Eisenstein series most tests use.
"""

import random

import pytest

from src.characters import char_make, trivial_character
from src.config.settings import reset_settings
from src.corpus import reset_corpus_loader
from src.eisenstein import katz_eisenstein
from src.gf import make_field
from src.qseries import make_form


@pytest.fixture(autouse=True)
def _fresh_settings():
    reset_settings()
    reset_corpus_loader()
    yield
    reset_settings()
    reset_corpus_loader()


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def F7():
    return make_field(7)


@pytest.fixture
def F49():
    return make_field(7, 2)


@pytest.fixture
def triv7(F7):
    return trivial_character(F7)


@pytest.fixture
def chi4(F7):
    """The odd character mod 4."""
    return char_make(4, {3: -1}, F7)


@pytest.fixture
def chi3(F7):
    """The odd character mod 3."""
    return char_make(3, {2: -1}, F7)


@pytest.fixture
def chi5(F7):
    """The even quadratic character mod 5."""
    return char_make(5, {2: -1}, F7)


@pytest.fixture
def e4(triv7):
    """E_4 mod 7, level 1, to precision 150."""
    return katz_eisenstein(4, triv7, triv7, 1, 7, 150)


@pytest.fixture
def e3_chi4(chi4, triv7):
    """E_3^{chi4,1} mod 7, level 4, to precision 150."""
    return katz_eisenstein(3, chi4, triv7, 1, 7, 150)


def random_form(rng, base, prec, level=1, weight=2, character=None):
    """A form with uniformly random coefficients (no flags asserted)."""
    coeffs = [base.element_from_index(rng.randrange(base.order)) for _ in range(prec + 1)]
    return make_form(base, coeffs, level=level, weight=weight, character=character, prec=prec)
