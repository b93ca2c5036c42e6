from collections.abc import Sequence

from app.api.error_codes import ErrorCode

ExtraValue = str | int | float | list[int] | list[str] | None

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_MALFORMED = 3


class InvariantsError(Exception):
    error_code: ErrorCode
    exit_code: int

    def __init__(self, *, extra: dict[str, ExtraValue] | None = None) -> None:
        if extra is None:
            extra = {}
        self.extra = extra
        super().__init__(f"{self.error_code}: {extra}" if extra else str(self.error_code))

    @property
    def detail(self) -> dict[str, ErrorCode | dict[str, ExtraValue]]:
        return {"error_code": self.error_code, "extra": self.extra}


class MalformedInputError(InvariantsError):
    error_code = ErrorCode.MALFORMED_INPUT
    exit_code = EXIT_MALFORMED

    def __init__(self, reason: str, **extra: ExtraValue) -> None:
        super().__init__(extra={"reason": reason, **extra})


class MismatchedAlphabetsError(InvariantsError):
    error_code = ErrorCode.MISMATCHED_ALPHABETS
    exit_code = EXIT_MALFORMED

    def __init__(self, left: str, right: str) -> None:
        super().__init__(extra={"left": left, "right": right})


class InvalidIndicesError(InvariantsError):
    error_code = ErrorCode.INVALID_INDICES
    exit_code = EXIT_MALFORMED

    def __init__(self, indices: Sequence[int], reason: str) -> None:
        super().__init__(extra={"indices": list(indices), "reason": reason})


class InvalidPresentationError(InvariantsError):
    error_code = ErrorCode.INVALID_PRESENTATION
    exit_code = EXIT_MALFORMED

    def __init__(self, n: int, k: int | None, reason: str) -> None:
        super().__init__(extra={"n": n, "k": k, "reason": reason})


class MalformedBudgetError(InvariantsError):
    error_code = ErrorCode.MALFORMED_BUDGET
    exit_code = EXIT_MALFORMED

    def __init__(self, reason: str) -> None:
        super().__init__(extra={"reason": reason})


class NonPureBraidError(InvariantsError):
    error_code = ErrorCode.NON_PURE_BRAID
    exit_code = EXIT_VALIDATION

    def __init__(self, permutation: Sequence[int]) -> None:
        super().__init__(extra={"permutation": list(permutation)})


class InvalidFactorError(InvariantsError):
    error_code = ErrorCode.INVALID_FACTOR
    exit_code = EXIT_VALIDATION

    def __init__(self, site: str, indices: Sequence[int]) -> None:
        super().__init__(extra={"site": site, "indices": list(indices)})


class GenericityError(InvariantsError):
    error_code = ErrorCode.GENERICITY_VIOLATION
    exit_code = EXIT_VALIDATION

    def __init__(self, reason: str, time: float | None = None, participants: Sequence[int] = ()) -> None:
        super().__init__(extra={"reason": reason, "time": time, "participants": list(participants)})


class ProjectionSingularityError(InvariantsError):
    error_code = ErrorCode.PROJECTION_SINGULARITY
    exit_code = EXIT_VALIDATION

    def __init__(self, reason: str, time: float, point: int) -> None:
        super().__init__(extra={"reason": reason, "time": time, "point": point})


class ModuliValidationError(InvariantsError):
    error_code = ErrorCode.MODULI_VALIDATION
    exit_code = EXIT_VALIDATION

    def __init__(self, reason: str, time: float | None = None, subset: Sequence[int] = (), level: int | None = None) -> None:
        super().__init__(extra={"reason": reason, "time": time, "subset": list(subset), "level": level})


class ProjectionPointError(InvariantsError):
    error_code = ErrorCode.PROJECTION_POINT
    exit_code = EXIT_VALIDATION

    def __init__(self, hyperplane: int, attempts: int, level: int | None = None) -> None:
        super().__init__(extra={"hyperplane": hyperplane, "attempts": attempts, "level": level})


class PipelineStageError(InvariantsError):
    """Wraps the failure of one pipeline stage, keeping the wrapped code and exit code."""

    def __init__(self, stage: str, cause: InvariantsError) -> None:
        self.error_code = cause.error_code
        self.exit_code = cause.exit_code
        self.stage = stage
        self.cause = cause
        super().__init__(extra={"stage": stage, **cause.extra})
