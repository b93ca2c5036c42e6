from collections.abc import Callable
from io import StringIO
from pathlib import Path

import orjson
import pytest
from pytest_mock import MockerFixture

from app.engine.homs import phi
from app.engine.moduli import HyperplaneLoop
from app.engine.notation import format_word
from app.engine.tracker import Trajectory
from main import build_argparser, run
from tests.conftest import frames_trajectory, run_cli
from tests.constants import B13_BRAID, CONCURRENT_LINES

WriteJson = Callable[[str, dict], Path]


def _trajectory_file(write_json: WriteJson, tr: Trajectory, name: str = "trajectory.json") -> Path:
    return write_json(name, tr.to_document().model_dump(mode="json"))


def test_every_command_is_registered() -> None:
    parser = build_argparser()
    args = parser.parse_args(["groups", "info", "--n", "5"])
    assert args.k == 3
    assert callable(args.handler)


@pytest.mark.parametrize(
    ("argv", "generators", "tetrahedra"),
    [(["--n", "5", "--k", "3"], 10, 60), (["--n", "4"], 4, 12)],
)
def test_groups_info(argv: list[str], generators: int, tetrahedra: int) -> None:
    code, out = run_cli("groups", "info", *argv)
    assert code == 0
    assert out["generators"] == generators
    assert out["relations"]["tetrahedron"] == tetrahedra
    assert out["relations"]["involution"] == generators


def test_groups_info_g43_has_no_far_commutativity() -> None:
    _, out = run_cli("groups", "info", "--n", "4", "--k", "3")
    assert out["relations"]["far_commutativity"] == 0


def test_groups_info_gamma() -> None:
    code, out = run_cli("groups", "info", "--n", "5", "--gamma")
    assert code == 0
    assert out["generators"] == 15
    assert out["relations"]["pentagon"] > 0
    assert out["quotient_dimension"] == 9


def test_groups_info_invalid_parameters() -> None:
    code, out = run_cli("groups", "info", "--n", "3", "--k", "3")
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.invalid-presentation"


def test_word_normalize() -> None:
    code, out = run_cli("word", "normalize", "--n", "5", "--word", '["a_1_2_3", "a_3_4_5", "a_1_2_3"]')
    assert code == 0
    assert out["input"]["length"] == 3
    assert out["normal_form"]["word"] == ["a_3_4_5"]


def test_word_abelianize_from_file(tmp_path: Path) -> None:
    path = tmp_path / "word.json"
    path.write_bytes(orjson.dumps(["a_1_2_3", "a_1_2_4"]))
    code, out = run_cli("word", "abelianize", "--n", "4", "--word", str(path))
    assert code == 0
    assert out["abelianization"] == [1, 1, 0, 0]


def test_word_equiv() -> None:
    square = '["a_2_3_4", "a_1_3_4", "a_1_2_4", "a_1_2_3", "a_2_3_4", "a_1_3_4", "a_1_2_4", "a_1_2_3"]'
    code, out = run_cli("word", "equiv", "--n", "4", "--word", square, "--other", "[]")
    assert code == 0
    assert out["verdict"] == "equal"
    assert out["abelianizations_agree"]
    assert out["budget"]["max_states"] > 0


def test_word_equiv_rejects_bad_budget() -> None:
    code, out = run_cli("word", "equiv", "--n", "4", "--word", "[]", "--other", "[]", "--max-states", "0")
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.malformed-budget"


def test_unparsable_letter() -> None:
    code, out = run_cli("word", "normalize", "--n", "4", "--word", '["x_1"]')
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.malformed-input"


def test_hom_phi() -> None:
    code, out = run_cli("hom", "--kind", "phi", "--n", "4", "--word", '["b_1_2"]')
    assert code == 0
    assert out["word"]["word"] == format_word(phi(1, 2, 4).word)
    assert set(out["abelianization"]) == {0}


def test_hom_combs_sigma_words() -> None:
    code, out = run_cli("hom", "--kind", "xi", "--n", "4", "--sigma", "--word", '["s1", "s1"]')
    assert code == 0
    assert out["source"]["word"] == ["b_1_2"]
    assert out["skipped_factors"] == 4


def test_hom_errors() -> None:
    code, out = run_cli("hom", "--kind", "psi", "--n", "4", "--word", "[]")
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.invalid-presentation"
    code, out = run_cli("hom", "--kind", "phi", "--n", "4", "--sigma", "--word", '["s1"]')
    assert code == 2
    assert out["detail"]["error_code"] == "invariants.error.non-pure-braid"
    code, out = run_cli("hom", "--kind", "xi", "--n", "4", "--strict", "--word", '["b_1_2"]')
    assert code == 2
    assert out["detail"]["error_code"] == "invariants.error.invalid-factor"


def test_track_braid(write_json: WriteJson, b13_trajectory: Trajectory, tmp_path: Path) -> None:
    svg = tmp_path / "paths.svg"
    code, out = run_cli("track", "--input", str(_trajectory_file(write_json, b13_trajectory)), "--svg", str(svg))
    assert code == 0
    assert out["braid"]["word"] == B13_BRAID
    assert out["linking_numbers"]["1,3"] == 1
    assert out["combed"]["word"] == ["b_1_3"]
    assert svg.read_text().startswith("<svg")


def test_track_g3(write_json: WriteJson, b13_trajectory: Trajectory) -> None:
    code, out = run_cli("track", "--input", str(_trajectory_file(write_json, b13_trajectory)), "--emit", "g3")
    assert code == 0
    assert out["emit"] == "g3"
    assert set(out["abelianization"]) == {0}
    assert all(event["kind"] == "collinear3" for event in out["events"])


def test_track_needs_enough_points(write_json: WriteJson, b13_trajectory: Trajectory) -> None:
    code, out = run_cli("track", "--input", str(_trajectory_file(write_json, b13_trajectory)), "--emit", "g4")
    assert code == 3
    assert out["detail"]["extra"]["emit"] == "g4"


def test_track_genericity_failure(write_json: WriteJson) -> None:
    tr = frames_trajectory([[[0, 0], [1, 0], [2, 1]], [[0, 0], [0, 0], [2, 1]]], loop=False)
    code, out = run_cli("track", "--input", str(_trajectory_file(write_json, tr)))
    assert code == 2
    assert out["detail"]["error_code"] == "invariants.error.genericity-violation"


def test_track_malformed_documents(write_json: WriteJson, tmp_path: Path) -> None:
    bad = write_json("bad.json", {"n": 1, "times": [0.5, 0.2], "points": [[[0, 0]], [[1, 1]]]})
    code, out = run_cli("track", "--input", str(bad))
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.validation-error"
    assert out["detail"]["extra"]["errors"]

    code, out = run_cli("track", "--input", str(tmp_path / "missing.json"))
    assert code == 3
    assert out["detail"]["error_code"] == "invariants.error.malformed-input"

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, _ = run_cli("track", "--input", str(broken))
    assert code == 3


def test_moduli_validate() -> None:
    code, out = run_cli("moduli", "validate", "--demo", "m5_2")
    assert code == 0
    assert out["valid"]
    assert out["n"] == 5
    assert out["m"] == 2


def test_moduli_validate_reports_violations(write_json: WriteJson) -> None:
    path = write_json("lines.json", HyperplaneLoop.static(CONCURRENT_LINES).to_document().model_dump(mode="json"))
    code, out = run_cli("moduli", "validate", "--input", str(path))
    assert code == 0
    assert not out["valid"]
    assert out["violated"]["subset"] == [1, 2, 3]


def test_moduli_descend() -> None:
    code, out = run_cli("moduli", "descend", "--demo", "m4_1", "--emit", "braid", "--seed", "3")
    assert code == 0
    assert out["route"] == [4]
    assert out["labels"] == [1, 2, 3]
    assert out["seed"] == 3
    assert len(out["levels"]) == 1
    assert out["trajectory"]["mode"] == "sphere"
    assert "braid" in out


def test_moduli_descend_rejects_bad_routes() -> None:
    code, out = run_cli("moduli", "descend", "--demo", "m4_1", "--route", "4,3")
    assert code == 3
    assert out["detail"]["extra"]["reason"] == "route length must equal m"
    assert run(["moduli", "descend", "--demo", "m4_1", "--route", "a,b"], StringIO()) == 3


def test_moduli_needs_an_input() -> None:
    code, _ = run_cli("moduli", "validate")
    assert code == 3


def test_pipeline_output_is_byte_identical() -> None:
    first, second = StringIO(), StringIO()
    assert run(["pipeline", "--demo", "m6_1", "--seed", "2"], first) == 0
    assert run(["pipeline", "--demo", "m6_1", "--seed", "2"], second) == 0
    assert first.getvalue() == second.getvalue()
    report = orjson.loads(first.getvalue())
    assert report["source"] == "hyperplane_loop"
    assert report["seed"] == 2
    assert [h["kind"] for h in report["homs"]] == ["phi", "psi", "xi"]


def test_pipeline_single_hom() -> None:
    code, out = run_cli("pipeline", "--demo", "m4_1", "--hom", "xi")
    assert code == 0
    (outcome,) = out["homs"]
    assert outcome["kind"] == "xi"
    assert outcome["skipped_reason"]


def test_pipeline_on_a_trajectory(write_json: WriteJson, b13_trajectory: Trajectory) -> None:
    code, out = run_cli("pipeline", "--input", str(_trajectory_file(write_json, b13_trajectory)))
    assert code == 0
    assert out["source"] == "trajectory"
    assert out["linking_numbers"]["1,3"] == 1


def test_pipeline_stage_failure(write_json: WriteJson) -> None:
    path = write_json("lines.json", HyperplaneLoop.static(CONCURRENT_LINES).to_document().model_dump(mode="json"))
    code, out = run_cli("pipeline", "--input", str(path))
    assert code == 2
    assert out["detail"]["error_code"] == "invariants.error.moduli-validation"
    assert out["detail"]["extra"]["stage"] == "descend"


def test_usage_errors_are_malformed_input() -> None:
    assert run(["groups"], StringIO()) == 3
    assert run(["nonsense"], StringIO()) == 3
    assert run(["--version"], StringIO()) == 0


def test_unexpected_failures_are_internal(mocker: MockerFixture) -> None:
    mocker.patch("app.api.commands.groups.get_presentation", side_effect=RuntimeError("boom"))
    code, out = run_cli("groups", "info", "--n", "5")
    assert code == 1
    assert out["detail"]["error_code"] == "invariants.error.internal-error"
    assert out["detail"]["extra"]["error"] == "boom"
