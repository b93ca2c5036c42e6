import pytest
from pydantic import ValidationError
from pytest_mock import MockerFixture

from app.settings import Settings, assert_never, settings


def test_settings_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SEARCH_MAX_DEPTH", "5")
    monkeypatch.setenv("STRICT_HOMS", "true")
    monkeypatch.setenv("JOB", "freeze_golden")
    env_settings = Settings()  # type: ignore[reportCallIssue]
    assert env_settings.search_max_depth == 5
    assert env_settings.strict_homs
    assert env_settings.job == "freeze_golden"

    explicit = Settings(search_max_depth=7)  # type: ignore[reportCallIssue]
    assert explicit.search_max_depth == 7


@pytest.mark.parametrize(
    ("name", "value"),
    [("SEARCH_MAX_STATES", "0"), ("MODULI_TOLERANCE", "-1"), ("MAX_PROJECTIVE_STEP", "2"), ("JOB", "reindex")],
)
def test_invalid_settings(monkeypatch: pytest.MonkeyPatch, name: str, value: str) -> None:
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings()  # type: ignore[reportCallIssue]


def test_tolerances_follow_settings(mocker: MockerFixture) -> None:
    mocker.patch.object(settings, "moduli_tolerance", 1e-7)
    tolerances = settings.tolerances()
    assert tolerances["moduli"] == 1e-7
    assert tolerances["closure"] == settings.closure_tolerance
    assert set(tolerances) == {"closure", "delaunay", "event_resolution", "moduli", "projection_margin", "antipode", "pole"}


def test_assert_never() -> None:
    with pytest.raises(AssertionError, match="unreachable"):
        assert_never("nope")  # type: ignore[arg-type]
