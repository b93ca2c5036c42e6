import re

import pytest

from app.api import exceptions
from app.api.error_codes import ErrorCode
from app.api.exceptions import EXIT_MALFORMED, EXIT_VALIDATION, InvariantsError, PipelineStageError

ERRORS = [
    cls
    for cls in vars(exceptions).values()
    if isinstance(cls, type) and issubclass(cls, InvariantsError) and cls not in (InvariantsError, PipelineStageError)
]


def test_error_code_format() -> None:
    for code in ErrorCode:
        assert re.fullmatch(r"invariants\.error\.[a-z0-9]+(-[a-z0-9]+)*", code), code
    assert len(set(ErrorCode)) == len(list(ErrorCode))


@pytest.mark.parametrize("cls", ERRORS, ids=lambda cls: cls.__name__)
def test_every_error_has_a_code_and_exit_code(cls: type[InvariantsError]) -> None:
    assert cls.error_code in ErrorCode
    assert cls.exit_code in (EXIT_VALIDATION, EXIT_MALFORMED)


def test_error_codes_are_not_shared() -> None:
    codes = [cls.error_code for cls in ERRORS]
    assert len(codes) == len(set(codes))
