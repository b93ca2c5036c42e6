"""The group Gamma_n^4 of Delaunay flips.

d_(ijkl) stands for a quadrilateral with opposite pairs {i,k} and {j,l}; the
eight dihedral relabellings of the quadrilateral name the same generator.
"""

from collections.abc import Sequence
from functools import cached_property, lru_cache
from itertools import combinations, permutations

from app.api.exceptions import InvalidIndicesError, InvalidPresentationError
from app.api.models import SearchBudget
from app.engine.gf2 import EchelonBasis, F2Vector
from app.engine.presentation import Presentation, Relation, RelationKind
from app.engine.search import SearchResult, equivalent_bounded
from app.engine.words import Alphabet, AlphabetKind, GroupWord

GammaGenerator = tuple[int, int, int, int]


def gamma_alphabet(n: int) -> Alphabet:
    return Alphabet(AlphabetKind.GAMMA, n, 4)


def orbit(cycle: Sequence[int]) -> list[GammaGenerator]:
    i, j, k, l = cycle
    return [
        (i, j, k, l),
        (k, j, i, l),
        (i, l, k, j),
        (k, l, i, j),
        (j, k, l, i),
        (j, i, l, k),
        (l, k, j, i),
        (l, i, j, k),
    ]


def canonicalize(cycle: Sequence[int], n: int | None = None) -> GammaGenerator:
    if len(cycle) != 4 or len(set(cycle)) != 4:
        raise InvalidIndicesError(cycle, "need 4 distinct indices")
    if n is not None and (min(cycle) < 1 or max(cycle) > n):
        raise InvalidIndicesError(cycle, f"indices must lie in 1..{n}")
    return min(orbit(cycle))


def opposite_pairs(generator: GammaGenerator) -> frozenset[frozenset[int]]:
    i, j, k, l = generator
    return frozenset({frozenset({i, k}), frozenset({j, l})})


def quadruple_generators(a: int, b: int, c: int, d: int) -> list[GammaGenerator]:
    """The three pairings of a sorted 4-set, already canonical."""
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d)]


def pentagon_word(i: int, j: int, k: int, l: int, m: int) -> tuple[GammaGenerator, ...]:
    return (
        canonicalize((i, j, k, l)),
        canonicalize((i, j, l, m)),
        canonicalize((j, k, l, m)),
        canonicalize((i, j, k, m)),
        canonicalize((i, k, l, m)),
    )


def _cyclic_key(word: tuple[GammaGenerator, ...]) -> tuple[GammaGenerator, ...]:
    candidates = []
    for base in (word, word[::-1]):
        candidates.extend(base[r:] + base[:r] for r in range(len(base)))
    return min(candidates)


class GammaPresentation(Presentation):
    def __init__(self, n: int) -> None:
        if n < 4:
            raise InvalidPresentationError(n, 4, "requires n >= 4")
        self.n = n
        generators = sorted(g for quad in combinations(range(1, n + 1), 4) for g in quadruple_generators(*quad))
        super().__init__(gamma_alphabet(n), generators)

    def commutes(self, g: tuple[int, ...], h: tuple[int, ...]) -> bool:
        return len(set(g) & set(h)) < 3

    def canonical(self, indices: Sequence[int]) -> GammaGenerator:
        return canonicalize(indices, self.n)

    def long_relations(self) -> list[Relation]:
        relations = []
        for subset in combinations(range(1, self.n + 1), 5):
            seen: set[tuple[GammaGenerator, ...]] = set()
            for ordered in permutations(subset):
                word = pentagon_word(*ordered)
                key = _cyclic_key(word)
                if key in seen:
                    continue
                seen.add(key)
                relations.append(Relation(RelationKind.PENTAGON, self.alphabet, word))
        return relations

    @cached_property
    def pentagon_basis(self) -> EchelonBasis:
        basis = EchelonBasis(len(self.generators))
        for relation in self.relations:
            if relation.kind is RelationKind.PENTAGON:
                basis.add(F2Vector.from_indices(len(self.generators), (self.index[g] for g in relation.lhs)).bits)  # type: ignore[index]
        return basis

    @property
    def quotient_dimension(self) -> int:
        return self.pentagon_basis.quotient_dimension


@lru_cache(maxsize=16)
def get_gamma_presentation(n: int) -> GammaPresentation:
    return GammaPresentation(n)


def enumerate_gamma_relations(presentation: GammaPresentation) -> list[Relation]:
    return presentation.relations


def gamma_abelianize(w: GroupWord, presentation: GammaPresentation) -> F2Vector:
    raw = presentation.parity_vector(w)
    return F2Vector(raw.length, presentation.pentagon_basis.reduce(raw.bits))


def gamma_equivalent_bounded(
    w1: GroupWord, w2: GroupWord, presentation: GammaPresentation, budget: SearchBudget | None = None
) -> SearchResult:
    return equivalent_bounded(w1, w2, presentation, budget or SearchBudget.build())
