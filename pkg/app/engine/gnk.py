"""The k-free braid group G_n^k.

Generators a_m are indexed by k-subsets m of {1..n}; relations are the
involutions a_m^2 = 1, far commutativity for |m ∩ m'| < k-1, and one
tetrahedron relation per (k+1)-tuple up to order reversal.
"""

from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations, permutations

from app.api.exceptions import InvalidIndicesError, InvalidPresentationError
from app.api.models import SearchBudget
from app.engine.gf2 import F2Vector
from app.engine.presentation import Presentation, Relation, RelationKind
from app.engine.search import SearchResult, equivalent_bounded
from app.engine.words import Alphabet, AlphabetKind, GroupWord

GnkGenerator = tuple[int, ...]


def gnk_alphabet(n: int, k: int) -> Alphabet:
    return Alphabet(AlphabetKind.GNK, n, k)


def check_parameters(n: int, k: int) -> None:
    if k < 2 or n <= k:
        raise InvalidPresentationError(n, k, "requires n > k >= 2")


def gnk_generator(indices: Sequence[int], n: int, k: int) -> GnkGenerator:
    canonical = tuple(sorted(indices))
    if len(canonical) != k or len(set(canonical)) != k:
        raise InvalidIndicesError(indices, f"need {k} distinct indices")
    if canonical[0] < 1 or canonical[-1] > n:
        raise InvalidIndicesError(indices, f"indices must lie in 1..{n}")
    return canonical


def enumerate_generators(n: int, k: int) -> list[GnkGenerator]:
    check_parameters(n, k)
    return list(combinations(range(1, n + 1), k))


def tetrahedron_word(u: Sequence[int]) -> list[GnkGenerator]:
    """a_{m^1} … a_{m^{k+1}} with m^j = U minus u_j."""
    return [tuple(sorted(x for x in u if x != drop)) for drop in u]


class GnkPresentation(Presentation):
    def __init__(self, n: int, k: int) -> None:
        self.n = n
        self.k = k
        super().__init__(gnk_alphabet(n, k), enumerate_generators(n, k))

    def commutes(self, g: tuple[int, ...], h: tuple[int, ...]) -> bool:
        return len(set(g) & set(h)) < self.k - 1

    def canonical(self, indices: Sequence[int]) -> GnkGenerator:
        return gnk_generator(indices, self.n, self.k)

    def long_relations(self) -> list[Relation]:
        relations = []
        for subset in combinations(range(1, self.n + 1), self.k + 1):
            for u in permutations(subset):
                # U and its reversal give the same relation
                if u < u[::-1]:
                    word = tuple(tetrahedron_word(u))
                    relations.append(Relation(RelationKind.TETRAHEDRON, self.alphabet, word, word[::-1]))
        return relations


@lru_cache(maxsize=64)
def get_presentation(n: int, k: int) -> GnkPresentation:
    return GnkPresentation(n, k)


def enumerate_relations(presentation: GnkPresentation) -> list[Relation]:
    return presentation.relations


def abelianize(w: GroupWord, presentation: GnkPresentation) -> F2Vector:
    return presentation.parity_vector(w)


def parity(w: GroupWord) -> int:
    return len(w) % 2


def gnk_equivalent_bounded(
    w1: GroupWord, w2: GroupWord, presentation: GnkPresentation, budget: SearchBudget | None = None
) -> SearchResult:
    return equivalent_bounded(w1, w2, presentation, budget or SearchBudget.build())
