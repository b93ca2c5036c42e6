import numpy as np
import orjson
import pytest
from more_itertools import partition

from app.api.error_codes import ErrorCode
from app.api.exceptions import EXIT_VALIDATION, PipelineStageError
from app.api.tools.json_formatter import dumps, report_output
from app.engine.demos import DEMOS, moment_covectors
from app.engine.homs import HomKind
from app.engine.moduli import HyperplaneLoop
from app.engine.pipeline import Stage, default_route, run_pipeline, surviving_labels
from app.engine.tracker import Trajectory
from app.jobs.freeze_golden import GOLDEN_DEMOS, golden_path, invariant_summary, summary_path
from app.settings import settings
from tests.conftest import frames_trajectory
from tests.constants import CONCURRENT_LINES


def test_default_route_and_labels(m5_2: HyperplaneLoop) -> None:
    assert default_route(m5_2) == [5, 4]
    assert surviving_labels(5, [5, 4]) == [1, 2, 3]
    assert surviving_labels(6, [2]) == [1, 3, 4, 5, 6]


def test_static_loop_has_trivial_invariants() -> None:
    nodes = np.array([0.0, 1.0, 2.0 + 1.0j, -1.0 + 0.5j, 0.5 - 1.5j, 3.0])
    report = run_pipeline(HyperplaneLoop.static(moment_covectors(nodes, 1), samples=5))
    assert report.source == "hyperplane_loop"
    assert report.labels == (1, 2, 3, 4)
    assert not report.braid.word
    assert not report.combed
    assert set(report.linking_numbers.values()) == {0}
    ran, skipped = partition(lambda h: h.skipped_reason is not None, report.homs)
    for outcome in ran:
        assert outcome.word is not None
        assert not outcome.word
        assert not outcome.invariant
    assert [h.kind for h in skipped] == [HomKind.PSI]
    planar = {p.target: p for p in report.planar}
    assert planar["g4"].skipped_reason is not None
    assert planar["g3"].events is not None
    assert not planar["g3"].events.word
    assert planar["gamma4"].events is not None
    assert not planar["gamma4"].events.word


def test_m4_1_skips_every_hom(m4_1: HyperplaneLoop) -> None:
    report = run_pipeline(m4_1)
    assert report.route == [4]
    assert report.labels == (1, 2)
    assert report.closure_deviation is not None
    assert report.closure_deviation < 1e-9
    assert all(h.skipped_reason is not None for h in report.homs)
    assert all(p.skipped_reason is not None for p in report.planar)
    assert list(report.linking_numbers) == [(1, 2)]


def test_trajectory_source(b13_trajectory: Trajectory) -> None:
    report = run_pipeline(b13_trajectory, homs=(HomKind.PHI,))
    assert report.source == "trajectory"
    assert report.route == []
    assert not report.levels
    assert report.linking_numbers[(1, 3)] == 1
    assert report.linking_numbers_modulo_center == report.linking_numbers
    (phi_outcome,) = report.homs
    assert phi_outcome.kind is HomKind.PHI
    assert phi_outcome.word is not None


@pytest.mark.parametrize(("demo", "labels"), [("m5_2", (1, 2)), ("m6_1", (1, 2, 3, 4))])
def test_doubled_loop_doubles_linking_numbers(demo: str, labels: tuple[int, ...], request: pytest.FixtureRequest) -> None:
    loop = request.getfixturevalue(demo)
    single = run_pipeline(loop, seed=3)
    double = run_pipeline(loop.repeat(2), seed=3)
    assert single.labels == double.labels == labels
    assert double.linking_numbers_modulo_center == {
        pair: 2 * value for pair, value in single.linking_numbers_modulo_center.items()
    }
    assert double.linking_numbers == {pair: 2 * value for pair, value in single.linking_numbers.items()}
    for outcome in double.homs:
        if outcome.invariant is not None:
            assert not outcome.invariant
    for outcome in double.planar:
        if outcome.invariant is not None:
            assert not outcome.invariant


def test_report_is_deterministic(m6_1: HyperplaneLoop) -> None:
    first = dumps(report_output(run_pipeline(m6_1, seed=4)))
    second = dumps(report_output(run_pipeline(m6_1, seed=4)))
    assert first == second


@pytest.mark.parametrize("demo", GOLDEN_DEMOS)
def test_golden_reports(demo: str) -> None:
    report = report_output(run_pipeline(DEMOS[demo]()))
    summary = settings.golden_dir / summary_path(demo)
    full = settings.golden_dir / golden_path(demo)
    if not summary.exists() and not full.exists():
        pytest.skip(f"nothing frozen for {demo} in {settings.golden_dir}")
    if summary.exists():
        assert invariant_summary(report) == orjson.loads(summary.read_bytes())
    if full.exists():
        assert dumps(report) == full.read_bytes()


def test_m4_1_summary_is_frozen() -> None:
    assert (settings.golden_dir / summary_path("m4_1")).exists()


def test_failing_stage_is_named() -> None:
    with pytest.raises(PipelineStageError) as exc_info:
        run_pipeline(HyperplaneLoop.static(CONCURRENT_LINES))
    err = exc_info.value
    assert err.stage == Stage.DESCEND
    assert err.error_code == ErrorCode.MODULI_VALIDATION
    assert err.exit_code == EXIT_VALIDATION
    assert err.extra["stage"] == "descend"


def test_braid_stage_failure() -> None:
    tr = frames_trajectory([[[0, 0], [1, 0], [2, 1]], [[0, 0], [0, 0], [2, 1]]], loop=False)
    with pytest.raises(PipelineStageError) as exc_info:
        run_pipeline(tr)
    assert exc_info.value.stage == Stage.BRAID
    assert exc_info.value.error_code == ErrorCode.GENERICITY_VIOLATION
