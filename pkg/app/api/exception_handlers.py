import sys
from typing import IO

from pydantic import ValidationError

from app.api.error_codes import ErrorCode
from app.api.exceptions import EXIT_INTERNAL, EXIT_MALFORMED, InvariantsError
from app.api.tools.json_formatter import dumps
from app.custom_logging import get_logger

logger = get_logger(__name__)


def _emit(detail: dict, stream: IO[str] | None) -> None:
    (stream or sys.stdout).write(dumps({"detail": detail}).decode())


def invariants_error_handler(exc: InvariantsError, stream: IO[str] | None = None) -> int:
    _emit(exc.detail, stream)
    return exc.exit_code


def standard_validation_exception_handler(exc: ValidationError, stream: IO[str] | None = None) -> int:
    errors = [{"loc": [str(part) for part in e["loc"]], "msg": e["msg"], "type": e["type"]} for e in exc.errors()]
    _emit({"error_code": ErrorCode.VALIDATION_ERROR, "extra": {"errors": errors}}, stream)
    return EXIT_MALFORMED


def internal_error_handler(exc: Exception, stream: IO[str] | None = None) -> int:
    logger.exception("unexpected failure")
    _emit({"error_code": ErrorCode.INTERNAL_ERROR, "extra": {"error": str(exc)}}, stream)
    return EXIT_INTERNAL


def handle(exc: Exception, stream: IO[str] | None = None) -> int:
    match exc:
        case InvariantsError():
            return invariants_error_handler(exc, stream)
        case ValidationError():
            return standard_validation_exception_handler(exc, stream)
        case _:
            return internal_error_handler(exc, stream)
