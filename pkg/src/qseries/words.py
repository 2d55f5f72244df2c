"""
Words in the Hasse invariant A and Frobenius.

Weights follow the recursion: the empty word has the start weight k,
A.W has weight w + p - 1 and Frob.W has weight p w. Letters are stored as
written, so the rightmost letter acts first.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import PreconditionError
from .form import ModularForm
from .operators import frobenius, hasse_mult

A = "A"
FROB = "Frob"


@dataclass(frozen=True)
class WeightWord:
    letters: Tuple[str, ...] = ()

    def __post_init__(self):
        bad = [x for x in self.letters if x not in (A, FROB)]
        if bad:
            raise PreconditionError("weight_word", f"unknown letters {bad}")

    def weight(self, k: int, p: int) -> int:
        w = k
        for letter in reversed(self.letters):
            w = w + p - 1 if letter == A else p * w
        return w

    @property
    def frobenius_count(self) -> int:
        return sum(1 for x in self.letters if x == FROB)

    def apply(self, f: ModularForm) -> ModularForm:
        for letter in reversed(self.letters):
            f = hasse_mult(f, 1) if letter == A else frobenius(f)
        return f

    def __str__(self) -> str:
        return ".".join(self.letters) if self.letters else "1"


def enumerate_words(k: int, target_weight: int, p: int) -> List[WeightWord]:
    """Every word taking weight k to `target_weight`.

    Frob is not applied at weight <= 0, where it would not raise the weight.
    """
    found: List[WeightWord] = []

    def extend(letters: Tuple[str, ...], w: int) -> None:
        if w == target_weight:
            found.append(WeightWord(letters))
        if w + p - 1 <= target_weight:
            extend((A,) + letters, w + p - 1)
        if w > 0 and p * w <= target_weight:
            extend((FROB,) + letters, p * w)

    if k <= target_weight:
        extend((), k)
    return found
