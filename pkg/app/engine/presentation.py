"""Shared machinery of the two involutive presentations (G_n^k and Gamma_n^4).

Both groups are generated by involutions with a far-commutativity graph plus one
family of longer relators. Words are handled internally as tuples of generator
indices; the public surface speaks ``GroupWord``.
"""

from abc import ABC, abstractmethod
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

from app.api.exceptions import InvalidIndicesError, MismatchedAlphabetsError
from app.engine.gf2 import F2Vector
from app.engine.words import Alphabet, GroupWord, Letter

Encoded = tuple[int, ...]


class RelationKind(StrEnum):
    INVOLUTION = "involution"
    FAR_COMMUTATIVITY = "far_commutativity"
    TETRAHEDRON = "tetrahedron"
    PENTAGON = "pentagon"


@dataclass(frozen=True)
class Relation:
    """lhs = rhs, with both sides kept as unreduced generator sequences."""

    kind: RelationKind
    alphabet: Alphabet
    lhs: tuple[Hashable, ...]
    rhs: tuple[Hashable, ...] = ()

    @property
    def raw_word(self) -> tuple[Hashable, ...]:
        # generators are involutions, so rhs⁻¹ is rhs reversed
        return self.lhs + tuple(reversed(self.rhs))

    @property
    def word(self) -> GroupWord:
        return GroupWord(self.alphabet, tuple(Letter(g) for g in self.raw_word))

    @property
    def sides(self) -> tuple[GroupWord, GroupWord]:
        return GroupWord.of(self.alphabet, *self.lhs), GroupWord.of(self.alphabet, *self.rhs)


class Presentation(ABC):
    alphabet: Alphabet
    generators: list[tuple[int, ...]]

    def __init__(self, alphabet: Alphabet, generators: Sequence[tuple[int, ...]]) -> None:
        self.alphabet = alphabet
        self.generators = list(generators)
        self.index = {g: i for i, g in enumerate(self.generators)}

    @abstractmethod
    def commutes(self, g: tuple[int, ...], h: tuple[int, ...]) -> bool: ...

    @abstractmethod
    def long_relations(self) -> list[Relation]: ...

    @abstractmethod
    def canonical(self, indices: Sequence[int]) -> tuple[int, ...]: ...

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @cached_property
    def commute_masks(self) -> list[int]:
        masks = [0] * len(self.generators)
        for a, g in enumerate(self.generators):
            for b in range(a + 1, len(self.generators)):
                if self.commutes(g, self.generators[b]):
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
        return masks

    @cached_property
    def relations(self) -> list[Relation]:
        involutions = [Relation(RelationKind.INVOLUTION, self.alphabet, (g, g)) for g in self.generators]
        far = [
            Relation(RelationKind.FAR_COMMUTATIVITY, self.alphabet, (g, h), (h, g))
            for a, g in enumerate(self.generators)
            for b, h in enumerate(self.generators)
            if a < b and (self.commute_masks[a] >> b) & 1
        ]
        return involutions + far + self.long_relations()

    def relation_counts(self) -> dict[RelationKind, int]:
        counts = dict.fromkeys(RelationKind, 0)
        for relation in self.relations:
            counts[relation.kind] += 1
        return {kind: count for kind, count in counts.items() if count or kind is RelationKind.FAR_COMMUTATIVITY}

    def word(self, generators: Sequence[Sequence[int]]) -> GroupWord:
        return GroupWord(self.alphabet, tuple(Letter(self.canonical(g)) for g in generators))

    def encode(self, w: GroupWord) -> Encoded:
        if w.alphabet != self.alphabet:
            raise MismatchedAlphabetsError(str(self.alphabet), str(w.alphabet))
        try:
            return tuple(self.index[letter.generator] for letter in w.letters)  # type: ignore[index]
        except KeyError as err:
            raise InvalidIndicesError(list(err.args[0]), "unknown generator") from err

    def decode(self, encoded: Encoded) -> GroupWord:
        return GroupWord(self.alphabet, tuple(Letter(self.generators[i]) for i in encoded))

    def parity_vector(self, w: GroupWord) -> F2Vector:
        return F2Vector.from_indices(len(self.generators), self.encode(w))

    # trace normal form

    def reduce_trace(self, encoded: Encoded) -> list[int]:
        """Cancels every pair g…g whose enclosed letters all commute with g."""
        masks = self.commute_masks
        out: list[int] = []
        for g in encoded:
            p = len(out) - 1
            while p >= 0 and out[p] != g and (masks[g] >> out[p]) & 1:
                p -= 1
            if p >= 0 and out[p] == g:
                del out[p]
            else:
                out.append(g)
        return out

    def normal_form(self, encoded: Encoded) -> Encoded:
        """Lexicographically least representative of the reduced trace."""
        masks = self.commute_masks
        remaining = self.reduce_trace(encoded)
        result: list[int] = []
        while remaining:
            best = -1
            blockers = 0
            for p, g in enumerate(remaining):
                if blockers & ~masks[g] == 0 and (best < 0 or g < remaining[best]):
                    best = p
                blockers |= 1 << g
            result.append(remaining.pop(best))
        return tuple(result)

    def normalize(self, w: GroupWord) -> GroupWord:
        return self.decode(self.normal_form(self.encode(w)))
