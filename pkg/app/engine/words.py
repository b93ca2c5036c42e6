"""Reduced group words over the alphabets used throughout the package.

A word is an immutable value: construction always yields the reduced form, so
structural equality of two words is equality in the free product of the
alphabet (free group, or free product of Z/2's for involutive alphabets).
"""

from collections.abc import Hashable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import NamedTuple, Self

from app.api.exceptions import MalformedInputError, MismatchedAlphabetsError


class AlphabetKind(StrEnum):
    GNK = "gnk"
    GAMMA = "gamma"
    SIGMA = "sigma"
    PURE = "pure"
    FREE = "free"


@dataclass(frozen=True)
class Alphabet:
    kind: AlphabetKind
    n: int = 0
    k: int | None = None

    @property
    def involutive(self) -> bool:
        return self.kind in {AlphabetKind.GNK, AlphabetKind.GAMMA}

    def __str__(self) -> str:
        match self.kind:
            case AlphabetKind.GNK:
                return f"G_{self.n}^{self.k}"
            case AlphabetKind.GAMMA:
                return f"Gamma_{self.n}^4"
            case AlphabetKind.SIGMA:
                return f"B_{self.n}"
            case AlphabetKind.PURE:
                return f"PB_{self.n}"
            case _:
                return "F"


FREE = Alphabet(AlphabetKind.FREE)


class Letter(NamedTuple):
    generator: Hashable
    exponent: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)


def _reduce(letters: Iterable[Letter], *, involutive: bool) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if letter.exponent not in {1, -1}:
            raise MalformedInputError("exponent must be +1 or -1", exponent=letter.exponent)
        current = Letter(letter.generator, 1) if involutive else letter
        if stack and stack[-1].generator == current.generator and (involutive or stack[-1].exponent == -current.exponent):
            stack.pop()
        else:
            stack.append(current)
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    alphabet: Alphabet
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters, involutive=self.alphabet.involutive))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> Self:
        return cls(alphabet)

    @classmethod
    def of(cls, alphabet: Alphabet, *generators: Hashable) -> Self:
        return cls(alphabet, tuple(Letter(g) for g in generators))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return concat(self, other)

    def __pow__(self, power: int) -> "GroupWord":
        base = self if power >= 0 else invert(self)
        return GroupWord(self.alphabet, base.letters * abs(power))

    @property
    def generators(self) -> tuple[Hashable, ...]:
        return tuple(letter.generator for letter in self.letters)


def concat(w1: GroupWord, w2: GroupWord) -> GroupWord:
    if w1.alphabet != w2.alphabet:
        raise MismatchedAlphabetsError(str(w1.alphabet), str(w2.alphabet))
    return GroupWord(w1.alphabet, w1.letters + w2.letters)


def concat_all(alphabet: Alphabet, words: Iterable[GroupWord]) -> GroupWord:
    letters: list[Letter] = []
    for word in words:
        if word.alphabet != alphabet:
            raise MismatchedAlphabetsError(str(alphabet), str(word.alphabet))
        letters.extend(word.letters)
    return GroupWord(alphabet, tuple(letters))


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(w.alphabet, tuple(letter.inverse() for letter in reversed(w.letters)))


def conjugate(w: GroupWord, by: GroupWord) -> GroupWord:
    """by · w · by⁻¹"""
    return concat_all(w.alphabet, (by, w, invert(by)))
