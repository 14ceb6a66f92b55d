"""Braid words and the Artin action of B_n on the free group F_n.

sigma_i acts on the right by

    x_i     -> x_{i+1}
    x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
    x_j     -> x_j            (j != i, i+1)

and a braid word acts letter by letter from left to right, so
``w^(s t) = (w^s)^t``.  Because the action is faithful, two braids are equal
exactly when they move x_1, ..., x_n to the same words.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import IndexRangeError, MalformedWordError, StrandMismatchError, SchemaError
from .words import Letters, Word, invert_letters, substitute_letters


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise IndexRangeError(f"a braid needs at least 2 strands, got {self.strands!r}")
        letters = tuple(self.letters)
        for pos, x in enumerate(letters):
            if not isinstance(x, int) or x == 0:
                raise MalformedWordError(f"braid letter {x!r} at position {pos} is not a nonzero integer")
            if abs(x) >= self.strands:
                raise IndexRangeError(
                    f"sigma_{abs(x)} at position {pos} does not exist in B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_powers(cls, strands: int, *pairs: tuple[int, int]) -> "BraidWord":
        """``from_powers(4, (2, 16))`` is sigma_2^16."""
        letters: list[int] = []
        for gen, power in pairs:
            letters.extend([gen if power > 0 else -gen] * abs(power))
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same_strands(self, other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, invert_letters(self.letters))

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data) -> "BraidWord":
        if not isinstance(data, dict) or "strands" not in data or "letters" not in data:
            raise SchemaError("braid must be an object with 'strands' and 'letters'")
        if not isinstance(data["letters"], list):
            raise SchemaError("braid 'letters' must be an array")
        return cls(data["strands"], tuple(data["letters"]))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def _same_strands(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatchError(f"braids live in B_{a.strands} and B_{b.strands}")


@lru_cache(maxsize=None)
def _generator_images(strands: int, letter: int) -> tuple[Letters, ...]:
    i = abs(letter)
    images = [(j,) for j in range(1, strands + 1)]
    if letter > 0:
        images[i - 1] = (i + 1,)
        images[i] = (i + 1, i, -(i + 1))
    else:
        images[i - 1] = (-i, i + 1, i)
        images[i] = (i,)
    return tuple(images)


def artin_images(b: BraidWord) -> tuple[Letters, ...]:
    """Images of x_1..x_n under ``b``, as raw reduced letter tuples."""
    return _artin_images_cached(b.strands, b.letters)


@lru_cache(maxsize=4096)
def _artin_images_cached(strands: int, letters: tuple[int, ...]) -> tuple[Letters, ...]:
    images = [(j,) for j in range(1, strands + 1)]
    for x in letters:
        step = _generator_images(strands, x)
        step_inv = [invert_letters(s) for s in step]
        images = [substitute_letters(im, step, step_inv) for im in images]
    return tuple(images)


def artin_action(b: BraidWord, w: Word) -> Word:
    """Right action ``w^b`` of the braid on a free group word."""
    if w.max_index > b.strands:
        raise IndexRangeError(
            f"word uses x_{w.max_index} but the braid has only {b.strands} strands")
    images = artin_images(b)
    return Word._trusted(substitute_letters(w.letters, images))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a b a^-1`` as a concatenated braid word."""
    _same_strands(a, b)
    return BraidWord(a.strands, a.letters + b.letters + invert_letters(a.letters))


def braids_equal(b1: BraidWord, b2: BraidWord) -> bool:
    _same_strands(b1, b2)
    return artin_images(b1) == artin_images(b2)


def writhe(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


def shift(b: BraidWord, offset: int, new_strands: int) -> BraidWord:
    """Rename sigma_i to sigma_{i+offset} inside B_new_strands."""
    letters = []
    for x in b.letters:
        j = abs(x) + offset
        if not 1 <= j < new_strands:
            raise IndexRangeError(f"sigma_{abs(x)} shifts to sigma_{j}, outside B_{new_strands}")
        letters.append(j if x > 0 else -j)
    return BraidWord(new_strands, tuple(letters))


def product(strands: int, braids: Sequence[BraidWord]) -> BraidWord:
    out = BraidWord(strands)
    for b in braids:
        out = out * b
    return out
