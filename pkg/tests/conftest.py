from collections.abc import Sequence
from io import StringIO
from pathlib import Path

import numpy as np
import orjson
import pytest

from app.api.models import TrajectoryMode
from app.engine.demos import m4_1_loop, m5_2_loop, m6_1_loop
from app.engine.gamma import GammaPresentation, get_gamma_presentation
from app.engine.gnk import GnkPresentation, get_presentation
from app.engine.moduli import HyperplaneLoop
from app.engine.tracker import Trajectory
from main import run
from tests.constants import B12_FRAMES, B13_FRAMES, SQUARE_FRAMES, SQUARE_INTERIOR_POINT


def frames_trajectory(frames: Sequence[Sequence[Sequence[float]]], *, loop: bool) -> Trajectory:
    points = np.asarray(frames, dtype=float)
    return Trajectory(np.linspace(0.0, 1.0, len(points)), points, TrajectoryMode.PLANE, loop)


def run_cli(*argv: str) -> tuple[int, dict]:
    out = StringIO()
    code = run(list(argv), out)
    return code, orjson.loads(out.getvalue())


@pytest.fixture
def g43() -> GnkPresentation:
    return get_presentation(4, 3)


@pytest.fixture
def g53() -> GnkPresentation:
    return get_presentation(5, 3)


@pytest.fixture
def g54() -> GnkPresentation:
    return get_presentation(5, 4)


@pytest.fixture
def gamma4() -> GammaPresentation:
    return get_gamma_presentation(4)


@pytest.fixture
def gamma5() -> GammaPresentation:
    return get_gamma_presentation(5)


@pytest.fixture
def b12_trajectory() -> Trajectory:
    return frames_trajectory(B12_FRAMES, loop=True)


@pytest.fixture
def b13_trajectory() -> Trajectory:
    return frames_trajectory(B13_FRAMES, loop=True)


@pytest.fixture
def square_trajectory() -> Trajectory:
    return frames_trajectory(SQUARE_FRAMES, loop=False)


@pytest.fixture
def square_with_interior_point() -> Trajectory:
    frames = [[*frame, SQUARE_INTERIOR_POINT] for frame in SQUARE_FRAMES]
    return frames_trajectory(frames, loop=False)


@pytest.fixture
def m4_1() -> HyperplaneLoop:
    return m4_1_loop()


@pytest.fixture
def m5_2() -> HyperplaneLoop:
    return m5_2_loop()


@pytest.fixture
def m6_1() -> HyperplaneLoop:
    return m6_1_loop()


@pytest.fixture
def write_json(tmp_path: Path):  # noqa: ANN201
    def write(name: str, document: dict) -> Path:
        path = tmp_path / name
        path.write_bytes(orjson.dumps(document))
        return path

    return write
