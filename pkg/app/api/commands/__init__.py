import argparse
from collections.abc import Callable
from pathlib import Path
from typing import Any

import orjson

from app.api.exceptions import MalformedInputError
from app.api.models import HyperplaneLoopDocument, TrajectoryDocument, WordDocument
from app.engine.notation import parse_word
from app.engine.words import Alphabet, GroupWord

Handler = Callable[[argparse.Namespace], dict[str, Any]]
Subparsers = argparse._SubParsersAction  # noqa: SLF001


def read_json(path: Path) -> Any:
    try:
        return orjson.loads(path.read_bytes())
    except FileNotFoundError as err:
        raise MalformedInputError("input file not found", path=str(path)) from err
    except orjson.JSONDecodeError as err:
        raise MalformedInputError("input is not valid JSON", path=str(path), error=str(err)) from err


def load_document(path: Path) -> HyperplaneLoopDocument | TrajectoryDocument:
    """A hyperplane loop when the document carries covectors, a trajectory otherwise."""
    raw = read_json(path)
    if not isinstance(raw, dict):
        raise MalformedInputError("input must be a JSON object", path=str(path))
    if "covectors" in raw:
        return HyperplaneLoopDocument.model_validate(raw)
    return TrajectoryDocument.model_validate(raw)


def parse_word_argument(text: str, alphabet: Alphabet) -> GroupWord:
    """Inline JSON array of letters, or a path to a file holding one."""
    candidate = Path(text)
    if not text.lstrip().startswith("[") and candidate.suffix == ".json":
        raw = read_json(candidate)
    else:
        try:
            raw = orjson.loads(text)
        except orjson.JSONDecodeError as err:
            raise MalformedInputError("word is not a JSON array", word=text) from err
    return parse_word(WordDocument.model_validate(raw).root, alphabet)


def route_argument(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        msg = f"route must be comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from err


def add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-states", type=int, default=None)
    parser.add_argument("--max-depth", type=int, default=None)
    parser.add_argument("--max-growth", type=int, default=None)


def add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--tol", type=float, default=None)
