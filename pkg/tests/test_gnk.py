from itertools import combinations

import pytest

from app.api.exceptions import InvalidIndicesError, InvalidPresentationError
from app.api.models import SearchBudget
from app.engine.gnk import (
    GnkPresentation,
    abelianize,
    enumerate_generators,
    enumerate_relations,
    get_presentation,
    gnk_equivalent_bounded,
    gnk_generator,
    parity,
    tetrahedron_word,
)
from app.engine.presentation import RelationKind
from app.engine.search import Verdict
from tests.constants import GNK_COUNTS


@pytest.mark.parametrize(("n", "k"), sorted(GNK_COUNTS))
def test_presentation_counts(n: int, k: int) -> None:
    generators, tetrahedra = GNK_COUNTS[(n, k)]
    p = get_presentation(n, k)
    counts = p.relation_counts()
    assert p.generator_count == generators
    assert counts[RelationKind.TETRAHEDRON] == tetrahedra
    assert counts[RelationKind.INVOLUTION] == generators
    assert (counts[RelationKind.FAR_COMMUTATIVITY] == 0) == (n == k + 1)


def test_g53_summary() -> None:
    p = get_presentation(5, 3)
    assert p.generator_count == 10
    assert p.relation_counts()[RelationKind.TETRAHEDRON] == 60


def test_g43_has_no_far_commutativity(g43: GnkPresentation) -> None:
    assert g43.relation_counts()[RelationKind.FAR_COMMUTATIVITY] == 0


@pytest.mark.parametrize(("n", "k"), [(3, 3), (2, 2), (5, 1)])
def test_invalid_parameters(n: int, k: int) -> None:
    with pytest.raises(InvalidPresentationError):
        enumerate_generators(n, k)


def test_generator_validation() -> None:
    assert gnk_generator([3, 1, 2], 5, 3) == (1, 2, 3)
    with pytest.raises(InvalidIndicesError):
        gnk_generator([1, 1, 2], 5, 3)
    with pytest.raises(InvalidIndicesError):
        gnk_generator([0, 1, 2], 5, 3)


def test_tetrahedron_word() -> None:
    assert tetrahedron_word([1, 2, 3, 4]) == [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3)]


def test_far_commutativity_rule(g53: GnkPresentation) -> None:
    assert g53.commutes((1, 2, 3), (3, 4, 5))
    assert not g53.commutes((1, 2, 3), (2, 3, 4))


def test_abelianize_and_parity(g43: GnkPresentation) -> None:
    w = g43.word([(1, 2, 3), (1, 2, 4), (1, 2, 3)])
    assert abelianize(w, g43).support == [g43.index[(1, 2, 4)]]
    assert parity(w) == 1


def test_relations_have_zero_abelianization() -> None:
    for n, k in [(4, 3), (5, 3), (5, 4), (6, 3), (6, 4)]:
        p = get_presentation(n, k)
        for relation in enumerate_relations(p):
            assert not abelianize(relation.word, p), relation


def test_normal_form_sorts_commuting_letters(g53: GnkPresentation) -> None:
    w = g53.word([(3, 4, 5), (1, 2, 3)])
    assert g53.normalize(w) == g53.word([(1, 2, 3), (3, 4, 5)])
    # a_m … a_m cancels across commuting letters
    assert not g53.normalize(g53.word([(1, 2, 3), (3, 4, 5), (1, 2, 3), (3, 4, 5)]))


def test_equivalent_bounded_detects_tetrahedron(g43: GnkPresentation) -> None:
    u = g43.word(tetrahedron_word([1, 2, 3, 4]))
    reversed_u = g43.word(tetrahedron_word([1, 2, 3, 4])[::-1])
    result = gnk_equivalent_bounded(u, reversed_u, g43)
    assert result.verdict is Verdict.EQUAL


def test_equivalent_bounded_never_claims_distinct_words_equal(g43: GnkPresentation) -> None:
    single = g43.word([(1, 2, 3)])
    result = gnk_equivalent_bounded(single, g43.word([]), g43, SearchBudget.build(max_states=500, max_depth=4))
    assert result.verdict is Verdict.UNKNOWN


@pytest.mark.slow
@pytest.mark.parametrize(("n", "k"), [(4, 3), (5, 3), (5, 4), (6, 3), (6, 4)])
def test_relations_are_trivial_by_search(n: int, k: int) -> None:
    p = get_presentation(n, k)
    empty = p.word([])
    for relation in enumerate_relations(p):
        assert gnk_equivalent_bounded(relation.word, empty, p).verdict is Verdict.EQUAL, relation


def test_relation_sides_agree(g53: GnkPresentation) -> None:
    for relation in enumerate_relations(g53):
        if relation.kind is RelationKind.TETRAHEDRON:
            lhs, rhs = relation.sides
            assert gnk_equivalent_bounded(lhs, rhs, g53).verdict is Verdict.EQUAL


def test_tetrahedra_cover_every_ordering_up_to_reversal() -> None:
    p = get_presentation(5, 3)
    subsets = {frozenset(r.lhs[0]) | frozenset(r.lhs[1]) for r in p.relations if r.kind is RelationKind.TETRAHEDRON}
    assert subsets == {frozenset(c) for c in combinations(range(1, 6), 4)}
