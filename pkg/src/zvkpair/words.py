"""Free group words over generators indexed 1, 2, 3, ...

A letter ``i > 0`` stands for the generator x_i and ``-i`` for its inverse.
Words are kept freely reduced at all times, so two words describe the same
free group element exactly when their letter tuples agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexRangeError, MalformedWordError

Letters = tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Letters:
    """Cancel adjacent ``(k, -k)`` pairs with a single stack pass."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(letters: Sequence[int]) -> Letters:
    w = free_reduce(letters)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def invert_letters(letters: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(letters))


def _check_letters(letters: Sequence[int]) -> None:
    for pos, x in enumerate(letters):
        if not isinstance(x, int) or isinstance(x, bool):
            raise MalformedWordError(f"letter {x!r} at position {pos} is not an integer")
        if x == 0:
            raise MalformedWordError(f"zero letter at position {pos}")


@dataclass(frozen=True)
class Word:
    """Freely reduced element of a free group."""

    letters: Letters = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        _check_letters(letters)
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def _trusted(cls, letters: Letters) -> "Word":
        # skips validation; caller guarantees a reduced nonzero tuple
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        out = Word()
        for _ in range(abs(n)):
            out = multiply(out, base)
        return out

    def inverse(self) -> "Word":
        return invert(self)

    @property
    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def exponent_sum(self, gen: int) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters if abs(x) == gen)

    def to_json(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_json(cls, data) -> "Word":
        if not isinstance(data, list):
            raise MalformedWordError(f"word must be a JSON array, got {type(data).__name__}")
        return cls(tuple(data))

    def __repr__(self) -> str:
        return f"Word({list(self.letters)})"


def reduce(letters: Iterable[int]) -> Word:
    """Return the freely reduced word spelled by ``letters``.

    >>> reduce([1, 2, -2, -1, 3])
    Word([3])
    """
    return Word(tuple(letters))


def multiply(a: Word, b: Word) -> Word:
    return Word._trusted(free_reduce(a.letters + b.letters))


def invert(a: Word) -> Word:
    return Word._trusted(invert_letters(a.letters))


def commutator(a: Word, b: Word) -> Word:
    """``a b a^-1 b^-1``."""
    return a * b * invert(a) * invert(b)


@dataclass(frozen=True)
class Endomorphism:
    """Substitution x_i -> images[i - 1] on the free group of rank ``arity``."""

    images: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(
            w if isinstance(w, Word) else Word(tuple(w)) for w in self.images))

    @property
    def arity(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, arity: int) -> "Endomorphism":
        return cls(tuple(Word((i,)) for i in range(1, arity + 1)))

    def __call__(self, w: Word) -> Word:
        return substitute(w, self)


def substitute_letters(letters: Sequence[int], images: Sequence[Letters],
                       inverse_images: Sequence[Letters] | None = None) -> Letters:
    """Raw-tuple version of :func:`substitute`; ``images`` is 0-based."""
    if inverse_images is None:
        inverse_images = [invert_letters(im) for im in images]
    out: list[int] = []
    for x in letters:
        piece = images[x - 1] if x > 0 else inverse_images[-x - 1]
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def substitute(w: Word, e: Endomorphism) -> Word:
    if w.max_index > e.arity:
        raise IndexRangeError(
            f"word uses generator {w.max_index} but the endomorphism has arity {e.arity}")
    return Word._trusted(substitute_letters(w.letters, [im.letters for im in e.images]))
