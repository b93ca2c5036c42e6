from enum import StrEnum


class ErrorCode(StrEnum):
    VALIDATION_ERROR = "invariants.error.validation-error"
    INTERNAL_ERROR = "invariants.error.internal-error"
    MALFORMED_INPUT = "invariants.error.malformed-input"
    MISMATCHED_ALPHABETS = "invariants.error.mismatched-alphabets"
    INVALID_INDICES = "invariants.error.invalid-indices"
    INVALID_PRESENTATION = "invariants.error.invalid-presentation"
    MALFORMED_BUDGET = "invariants.error.malformed-budget"
    NON_PURE_BRAID = "invariants.error.non-pure-braid"
    INVALID_FACTOR = "invariants.error.invalid-factor"
    GENERICITY_VIOLATION = "invariants.error.genericity-violation"
    PROJECTION_SINGULARITY = "invariants.error.projection-singularity"
    MODULI_VALIDATION = "invariants.error.moduli-validation"
    PROJECTION_POINT = "invariants.error.projection-point"
