from collections import defaultdict
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

from app.api.models import SearchBudget
from app.custom_logging import get_logger
from app.engine.presentation import Encoded, Presentation, RelationKind
from app.engine.words import GroupWord

LONG_RELATIONS = {RelationKind.TETRAHEDRON, RelationKind.PENTAGON}


class Verdict(StrEnum):
    EQUAL = "equal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchResult:
    verdict: Verdict
    explored: int
    depth: int


Move = tuple[Encoded, Encoded]


@lru_cache(maxsize=32)
def build_moves(presentation: Presentation, growth: int) -> dict[int, list[Move]]:
    """Substitutions u → v⁻¹ for every split u·v of every rotation of a long relator or its inverse.

    Involution and far-commutativity moves are absorbed by the trace normal form.
    """
    moves: dict[int, set[Move]] = defaultdict(set)
    for relation in presentation.relations:
        if relation.kind not in LONG_RELATIONS:
            continue
        relator = tuple(presentation.index[g] for g in relation.raw_word)  # type: ignore[index]
        for base in (relator, relator[::-1]):
            for r in range(len(base)):
                rotated = base[r:] + base[:r]
                for split in range(1, len(rotated) + 1):
                    u, v = rotated[:split], rotated[split:]
                    if len(v) <= len(u) + growth:
                        moves[u[0]].add((u, v[::-1]))
    return {first: sorted(found) for first, found in moves.items()}


class RelationSearch:
    """Bidirectional breadth-first search over relation moves.

    States are trace normal forms, so a verdict of EQUAL is always backed by an
    explicit chain of relation moves. Exhausting the budget yields UNKNOWN, which
    says nothing about inequality.
    """

    def __init__(self, presentation: Presentation, budget: SearchBudget) -> None:
        self.logger = get_logger(self.__class__.__name__)
        self.presentation = presentation
        self.budget = budget
        self.moves = build_moves(presentation, budget.max_growth)

    def neighbours(self, state: Encoded, max_len: int) -> set[Encoded]:
        found: set[Encoded] = set()
        for position, first in enumerate(state):
            for u, replacement in self.moves.get(first, ()):
                end = position + len(u)
                if state[position:end] != u:
                    continue
                candidate = state[:position] + replacement + state[end:]
                if len(candidate) > max_len:
                    continue
                found.add(self.presentation.normal_form(candidate))
        return found

    def run(self, w1: GroupWord, w2: GroupWord) -> SearchResult:
        start = self.presentation.normal_form(self.presentation.encode(w1))
        goal = self.presentation.normal_form(self.presentation.encode(w2))
        if start == goal:
            return SearchResult(Verdict.EQUAL, 1, 0)

        max_len = max(len(start), len(goal)) + self.budget.max_growth
        seen = [{start}, {goal}]
        frontiers = [{start}, {goal}]
        explored = 2
        depth = 0
        while depth < self.budget.max_depth and any(frontiers):
            # a side without neighbours empties early, the other one keeps going
            open_sides = [s for s in (0, 1) if frontiers[s]]
            side = min(open_sides, key=lambda s: len(frontiers[s]))
            nxt: set[Encoded] = set()
            for state in frontiers[side]:
                for candidate in self.neighbours(state, max_len):
                    if candidate in seen[1 - side]:
                        self.logger.debug("equal after %d states at depth %d", explored, depth + 1)
                        return SearchResult(Verdict.EQUAL, explored, depth + 1)
                    if candidate in seen[side]:
                        continue
                    seen[side].add(candidate)
                    nxt.add(candidate)
                    explored += 1
                    if explored >= self.budget.max_states:
                        self.logger.debug("state budget exhausted at depth %d", depth + 1)
                        return SearchResult(Verdict.UNKNOWN, explored, depth + 1)
            frontiers[side] = nxt
            depth += 1
        self.logger.debug("search ended with %d states at depth %d", explored, depth)
        return SearchResult(Verdict.UNKNOWN, explored, depth)


def equivalent_bounded(w1: GroupWord, w2: GroupWord, presentation: Presentation, budget: SearchBudget) -> SearchResult:
    return RelationSearch(presentation, budget).run(w1, w2)
