"""End-to-end invariants of a hyperplane loop or of a trajectory of points.

hyperplane loop -> descent -> spherical reduction -> braid word -> combing
-> linking numbers -> homomorphism images -> F2 invariants, next to the
planar event words of the reduced trajectory.
"""

from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import StrEnum
from time import perf_counter

from app.api.exceptions import InvariantsError, PipelineStageError
from app.api.models import TrajectoryMode
from app.custom_logging import get_logger
from app.engine.braids import LinkingNumbers, comb, linking_numbers, modulo_center
from app.engine.gamma import gamma_abelianize, get_gamma_presentation
from app.engine.gf2 import F2Vector
from app.engine.gnk import abelianize, get_presentation
from app.engine.homs import MINIMUM_STRANDS, HomKind, HomSpec, apply_hom, image_invariant
from app.engine.moduli import DescentLevel, HyperplaneLoop, descend
from app.engine.spherical import spherical_reduce
from app.engine.tracker import EXTRACTORS, BraidExtraction, EventWord, Trajectory, braid_word
from app.engine.words import GroupWord
from app.settings import settings

logger = get_logger(__name__)

PLANAR_MINIMUM = {"g3": 4, "g4": 5, "gamma4": 4}


class Stage(StrEnum):
    DESCEND = "descend"
    SPHERICAL_REDUCE = "spherical_reduce"
    BRAID = "braid_word"
    COMB = "comb"
    HOM = "hom"
    PLANAR = "planar_words"


@contextmanager
def stage(name: Stage) -> Iterator[None]:
    logger.info("stage %s started", name)
    start = perf_counter()
    try:
        yield
    except PipelineStageError:
        raise
    except InvariantsError as err:
        logger.warning("stage %s failed after %.3fs: %s", name, perf_counter() - start, err)
        raise PipelineStageError(name, err) from err
    logger.info("stage %s finished in %.3fs", name, perf_counter() - start)


@dataclass(frozen=True)
class HomOutcome:
    kind: HomKind
    word: GroupWord | None = None
    invariant: F2Vector | None = None
    skipped_factors: int = 0
    skipped_reason: str | None = None


@dataclass(frozen=True)
class PlanarOutcome:
    target: str
    events: EventWord | None = None
    invariant: F2Vector | None = None
    skipped_reason: str | None = None


@dataclass(frozen=True)
class PipelineReport:
    source: str
    seed: int
    tolerances: dict[str, float]
    labels: tuple[int, ...]
    braid: BraidExtraction
    combed: GroupWord
    linking_numbers: LinkingNumbers
    linking_numbers_modulo_center: LinkingNumbers
    route: list[int] = field(default_factory=list)
    levels: list[DescentLevel] = field(default_factory=list)
    closure_deviation: float | None = None
    homs: list[HomOutcome] = field(default_factory=list)
    planar: list[PlanarOutcome] = field(default_factory=list)


def default_route(loop: HyperplaneLoop) -> list[int]:
    """Restrict on the last hyperplane at every level."""
    return [loop.n - level for level in range(loop.m)]


def surviving_labels(n: int, route: Sequence[int]) -> list[int]:
    labels = list(range(1, n + 1))
    for i in route:
        del labels[i - 1]
    return labels


def _relabel(numbers: LinkingNumbers, labels: Sequence[int]) -> LinkingNumbers:
    relabelled = {}
    for (p, q), value in numbers.items():
        a, b = labels[p - 1], labels[q - 1]
        relabelled[(min(a, b), max(a, b))] = value
    return dict(sorted(relabelled.items()))


def hom_outcome(kind: HomKind, combed: GroupWord, *, strict: bool) -> HomOutcome:
    n = combed.alphabet.n
    if n < MINIMUM_STRANDS[kind]:
        return HomOutcome(kind, skipped_reason=f"{kind} needs at least {MINIMUM_STRANDS[kind]} strands, got {n}")
    spec = HomSpec(kind, n, strict)
    image = apply_hom(spec, combed)
    return HomOutcome(kind, image.word, image_invariant(spec, image.word), image.skipped_factors)


def planar_outcome(target: str, tr: Trajectory) -> PlanarOutcome:
    if tr.n < PLANAR_MINIMUM[target]:
        return PlanarOutcome(target, skipped_reason=f"{target} needs at least {PLANAR_MINIMUM[target]} points, got {tr.n}")
    events = EXTRACTORS[target](tr)
    if target == "gamma4":
        invariant = gamma_abelianize(events.word, get_gamma_presentation(tr.n))
    else:
        invariant = abelianize(events.word, get_presentation(tr.n, 3 if target == "g3" else 4))
    return PlanarOutcome(target, events, invariant)


def run_pipeline(
    source: HyperplaneLoop | Trajectory,
    *,
    route: list[int] | None = None,
    seed: int | None = None,
    tol: float | None = None,
    strict: bool | None = None,
    homs: Sequence[HomKind] = tuple(HomKind),
) -> PipelineReport:
    seed = settings.projection_seed if seed is None else seed
    tol = settings.moduli_tolerance if tol is None else tol
    strict = settings.strict_homs if strict is None else strict
    tolerances = {**settings.tolerances(), "moduli": tol}

    levels: list[DescentLevel] = []
    closure: float | None = None
    if isinstance(source, HyperplaneLoop):
        route = default_route(source) if route is None else list(route)
        with stage(Stage.DESCEND):
            descent = descend(source, route, seed, tol)
        levels = descent.levels
        closure = source.closure_deviation()
        trajectory = descent.trajectory
        labels = surviving_labels(source.n, route)
        kind = "hyperplane_loop"
    else:
        route = []
        trajectory = source
        labels = list(range(1, source.n + 1))
        kind = "trajectory"

    if trajectory.mode is TrajectoryMode.SPHERE:
        with stage(Stage.SPHERICAL_REDUCE):
            trajectory = spherical_reduce(trajectory)
        labels = labels[:-1]

    with stage(Stage.BRAID):
        extraction = braid_word(trajectory)
    with stage(Stage.COMB):
        combed = comb(extraction.word)
        raw = linking_numbers(combed)
    by_point = extraction.point_linking_numbers(raw)
    modulo = extraction.point_linking_numbers(modulo_center(raw))

    with stage(Stage.HOM):
        hom_outcomes = [hom_outcome(h, combed, strict=strict) for h in homs]
    with stage(Stage.PLANAR):
        planar = [planar_outcome(target, trajectory) for target in PLANAR_MINIMUM]

    return PipelineReport(
        source=kind,
        seed=seed,
        tolerances=tolerances,
        labels=tuple(labels),
        braid=extraction,
        combed=combed,
        linking_numbers=_relabel(by_point, labels),
        linking_numbers_modulo_center=_relabel(modulo, labels),
        route=route,
        levels=levels,
        closure_deviation=closure,
        homs=hom_outcomes,
        planar=planar,
    )
